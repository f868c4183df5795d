"""Core representation of {+1,-1} sequences packed into Python integers.

A sequence of length ``n`` lives in a single int: bit ``i`` is set exactly
when position ``i`` carries ``+1``.  All group operations (pointwise product,
cyclic shift) reduce to bitwise ops on that int, which keeps the search inner
loops in C.  Enumeration of a fixed-weight class runs in colexicographic
order so that progress can be expressed as a single integer rank and resumed
anywhere.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterator

from .errors import InputError

_HEX_FORM = re.compile(r"^n=(\d+):([0-9a-f]+)$")


def _mask(n: int) -> int:
    return (1 << n) - 1


def _rotate(bits: int, n: int, k: int) -> int:
    """Rotate packed bits so result bit i equals input bit (i + k) mod n."""
    k %= n
    if k == 0:
        return bits
    return ((bits >> k) | (bits << (n - k))) & _mask(n)


@dataclass(frozen=True)
class BitSequence:
    """A {+1,-1} sequence of length ``n``; bit ``i`` of ``bits`` set means +1."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InputError(f"sequence length must be positive, got {self.n}")
        if not 0 <= self.bits < (1 << self.n):
            raise InputError(f"bits 0x{self.bits:x} out of range for length {self.n}")

    def symbol(self, i: int) -> int:
        """The +1/-1 value at position ``i``."""
        return 1 if (self.bits >> (i % self.n)) & 1 else -1

    def __str__(self) -> str:
        return format_sequence(self)


@dataclass(frozen=True)
class Orbit:
    """A cyclic-shift orbit, identified by its lexicographically least rotation."""

    canonical: BitSequence
    size: int


def weight(x: BitSequence) -> int:
    """Number of +1 entries."""
    return x.bits.bit_count()


def plus_support(x: BitSequence) -> tuple[int, ...]:
    """Sorted positions carrying +1."""
    return tuple(i for i in range(x.n) if (x.bits >> i) & 1)


def from_plus_support(n: int, support) -> BitSequence:
    """Build the sequence of length ``n`` with +1 exactly at the given positions."""
    bits = 0
    for p in support:
        if not 0 <= p < n:
            raise InputError(f"support position {p} out of range for length {n}")
        bits |= 1 << p
    return BitSequence(n, bits)


def negate(x: BitSequence) -> BitSequence:
    """Flip every symbol."""
    return BitSequence(x.n, x.bits ^ _mask(x.n))


def pointwise_mul(x: BitSequence, y: BitSequence) -> BitSequence:
    """Entrywise product; on packed bits this is XNOR."""
    if x.n != y.n:
        raise InputError(f"length mismatch: {x.n} vs {y.n}")
    return BitSequence(x.n, ~(x.bits ^ y.bits) & _mask(x.n))


def cyclic_shift(x: BitSequence, k: int) -> BitSequence:
    """Shift so that position ``i`` of the result is position ``(i+k) mod n`` of ``x``."""
    return BitSequence(x.n, _rotate(x.bits, x.n, k))


def orbit_of(x: BitSequence) -> Orbit:
    """Canonical form (lexicographically least rotation as a +/- string) and orbit size."""
    s = format_sequence(x)
    rotations = {s[k:] + s[:k] for k in range(x.n)}
    return Orbit(parse_sequence(min(rotations)), len(rotations))


def format_sequence(x: BitSequence) -> str:
    return "".join("+" if (x.bits >> i) & 1 else "-" for i in range(x.n))


def format_sequence_hex(x: BitSequence) -> str:
    """Compact form ``n=<length>:<hex>`` with bit i of the hex value = position i."""
    return f"n={x.n}:{x.bits:x}"


def parse_sequence(text: str) -> BitSequence:
    """Parse either a +/- string or the ``n=<length>:<hex>`` form."""
    text = text.strip()
    m = _HEX_FORM.match(text)
    if m:
        n = int(m.group(1))
        bits = int(m.group(2), 16)
        if n < 1:
            raise InputError(f"sequence length must be positive, got {n}")
        if bits >= (1 << n):
            raise InputError(f"hex value {m.group(2)} does not fit in {n} bits")
        return BitSequence(n, bits)
    if not text:
        raise InputError("empty sequence")
    bits = 0
    for i, ch in enumerate(text):
        if ch == "+":
            bits |= 1 << i
        elif ch != "-":
            raise InputError(f"unexpected character {ch!r} in sequence")
    return BitSequence(len(text), bits)


# --- fixed-weight enumeration, colex order -------------------------------
#
# Supports are kept as ascending position lists.  The rank of a support
# S = {s_0 < s_1 < ...} is sum(C(s_j, j+1)); rank 0 is {0..k-1} and the
# successor step touches only the lowest movable element, so a long scan
# costs O(1) amortised per sequence.


def class_size(n: int, k: int) -> int:
    """Number of length-``n`` sequences with exactly ``k`` entries equal to +1."""
    _check_class(n, k)
    return math.comb(n, k)


@dataclass(frozen=True)
class WeightClass:
    """The set of length-``n`` sequences with exactly ``k`` entries equal to +1."""

    n: int
    k: int

    def __post_init__(self) -> None:
        _check_class(self.n, self.k)

    @property
    def size(self) -> int:
        return math.comb(self.n, self.k)

    def __iter__(self) -> Iterator[BitSequence]:
        return enumerate_weight_class(self.n, self.k)

    def __contains__(self, x: BitSequence) -> bool:
        return x.n == self.n and x.bits.bit_count() == self.k


def _check_class(n: int, k: int) -> None:
    if n < 1:
        raise InputError(f"sequence length must be positive, got {n}")
    if not 0 <= k <= n:
        raise InputError(f"weight {k} out of range for length {n}")


def rank_of(x: BitSequence) -> int:
    """Colex rank of ``x`` within its weight class."""
    return sum(math.comb(p, j + 1) for j, p in enumerate(plus_support(x)))


def unrank(n: int, k: int, r: int) -> BitSequence:
    """Inverse of :func:`rank_of`: the rank-``r`` sequence of weight ``k``."""
    _check_class(n, k)
    if not 0 <= r < math.comb(n, k):
        raise InputError(f"rank {r} out of range for weight class ({n},{k})")
    support = []
    rem = r
    for j in range(k, 0, -1):
        lo, hi = j - 1, n - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if math.comb(mid, j) <= rem:
                lo = mid
            else:
                hi = mid - 1
        support.append(lo)
        rem -= math.comb(lo, j)
    support.reverse()
    return from_plus_support(n, support)


def _advance_support(s: list, n: int) -> bool:
    """Step an ascending support list to its colex successor in place."""
    k = len(s)
    for j in range(k):
        nxt = s[j] + 1
        limit = s[j + 1] if j + 1 < k else n
        if nxt < limit:
            s[j] = nxt
            for i in range(j):
                s[i] = i
            return True
    return False


def iter_weight_class_bits(n: int, k: int, start: int = 0, stop=None) -> Iterator[int]:
    """Packed-int variant of :func:`enumerate_weight_class` for hot loops."""
    _check_class(n, k)
    total = math.comb(n, k)
    if stop is None:
        stop = total
    start = max(0, start)
    stop = min(stop, total)
    if start >= stop:
        return
    support = list(plus_support(unrank(n, k, start)))
    for _ in range(stop - start):
        bits = 0
        for p in support:
            bits |= 1 << p
        yield bits
        if not _advance_support(support, n):
            break


def enumerate_weight_class(n: int, k: int, start: int = 0, stop=None) -> Iterator[BitSequence]:
    """Yield the weight-``k`` sequences of length ``n`` in colex rank order.

    ``start``/``stop`` select a rank window, so a scan can be split into
    chunks or resumed mid-class without re-walking the prefix.
    """
    for bits in iter_weight_class_bits(n, k, start, stop):
        yield BitSequence(n, bits)
