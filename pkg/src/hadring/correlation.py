"""Periodic correlation of packed {+1,-1} sequences.

Two routes to the same number are kept side by side: a direct signed sum
over symbols and a popcount identity on the packed representation
(correlation at shift k equals twice the weight of X * shifted X, minus n).
The vector constructor always runs both and refuses to return if they
disagree, so the fast path can never drift from the definition unnoticed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, InvariantViolation
from .seqcore import BitSequence, _mask, _rotate


def _paf_bits(bits: int, n: int, k: int) -> int:
    """Autocorrelation of packed bits at shift k via the popcount identity."""
    agree = ~(bits ^ _rotate(bits, n, k)) & _mask(n)
    return 2 * agree.bit_count() - n


def periodic_correlation(x: BitSequence, y: BitSequence, k: int) -> int:
    """Signed sum of x[i] * y[i + k mod n], computed symbol by symbol."""
    if x.n != y.n:
        raise InputError(f"length mismatch: {x.n} vs {y.n}")
    n = x.n
    return sum(x.symbol(i) * y.symbol(i + k) for i in range(n))


@dataclass(frozen=True)
class AutocorrelationVector:
    n: int
    values: tuple[int, ...]

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, k: int) -> int:
        return self.values[k]


def autocorrelation_vector(x: BitSequence) -> AutocorrelationVector:
    """All periodic autocorrelations of ``x``, shifts 0 through n-1.

    Computed by both the direct sum and the popcount route; disagreement
    raises InvariantViolation.
    """
    n = x.n
    direct = tuple(periodic_correlation(x, x, k) for k in range(n))
    packed = tuple(_paf_bits(x.bits, n, k) for k in range(n))
    if direct != packed:
        raise InvariantViolation(
            f"autocorrelation routes disagree for {x}: direct={direct} packed={packed}"
        )
    return AutocorrelationVector(n, packed)


def shift_index(x: BitSequence, k: int) -> int:
    """Position of the shift-k product of ``x`` with itself inside its split family.

    For weight-a ``x``, the product X * (X shifted by k) has weight determined
    by an index i in [0, a] via correlation = n - 4a + 4i.  Non-integral or
    out-of-range i cannot happen for genuine inputs and raises
    InvariantViolation.
    """
    n = x.n
    if not 0 <= k < n:
        raise InputError(f"shift {k} out of range for length {n}")
    a = x.bits.bit_count()
    p = _paf_bits(x.bits, n, k)
    num = p - n + 4 * a
    if num % 4:
        raise InvariantViolation(
            f"shift index not integral for {x} at k={k}: correlation {p}"
        )
    i = num // 4
    if not 0 <= i <= a:
        raise InvariantViolation(
            f"shift index {i} outside [0, {a}] for {x} at k={k}"
        )
    return i


def correlation_sum_check(x: BitSequence) -> tuple[int, int]:
    """Sum of all n autocorrelations next to its closed form (2a - n)**2.

    The two entries are equal for every sequence; returning both lets bulk
    scans assert it cheaply.
    """
    n = x.n
    total = sum(_paf_bits(x.bits, n, k) for k in range(n))
    a = x.bits.bit_count()
    return total, (2 * a - n) ** 2
