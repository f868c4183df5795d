"""Weight-class algebra of {+1,-1} sequences under the pointwise product.

The sequences of length ``n`` form an elementary abelian 2-group, and
partitioning them by weight (number of +1 entries) yields classes whose
formal sums multiply with nonnegative integer coefficients.  This module
evaluates those coefficients in closed form, describes which weights a
product of two classes can reach, and enumerates the maximal families of
classes whose pairwise products all reach the largest class.

Basic sets are indexed by the number of -1 entries, so index ``i`` names the
weight-``n - i`` class and index 0 is the identity (the all-plus sequence).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .errors import InputError


def _check_index(n: int, idx: int, what: str) -> None:
    if not 0 <= idx <= n:
        raise InputError(f"{what} {idx} out of range for n={n}")


def structure_constant(n: int, i: int, j: int, k: int) -> int:
    """Coefficient of basic set ``k`` in the product of basic sets ``i`` and ``j``.

    Equivalently: for any fixed Z with k entries equal to -1, the number of X
    with i entries equal to -1 whose pointwise product with Z has j entries
    equal to -1.  Zero whenever i + j + k is odd.
    """
    if n < 1:
        raise InputError(f"length must be positive, got {n}")
    for idx, what in ((i, "index i"), (j, "index j"), (k, "index k")):
        _check_index(n, idx, what)
    if (i + j - k) % 2:
        return 0
    t1 = (j - i + k) // 2
    t2 = (j + i - k) // 2
    if not (0 <= t1 <= k and 0 <= t2 <= n - k):
        return 0
    return math.comb(k, t1) * math.comb(n - k, t2)


def structure_constant_by_weights(n: int, a: int, b: int, c: int) -> int:
    """Same coefficient, with the classes named by weight instead of index."""
    for w, what in ((a, "weight a"), (b, "weight b"), (c, "weight c")):
        _check_index(n, w, what)
    return structure_constant(n, n - a, n - b, n - c)


@dataclass(frozen=True)
class StructureConstantQuery:
    """A single (n, i, j, k) coefficient lookup, validated at construction."""

    n: int
    i: int
    j: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InputError(f"length must be positive, got {self.n}")
        for idx, what in ((self.i, "index i"), (self.j, "index j"), (self.k, "index k")):
            _check_index(self.n, idx, what)

    def evaluate(self) -> int:
        return structure_constant(self.n, self.i, self.j, self.k)


@dataclass(frozen=True)
class ProductSupport:
    """Weights reachable by pointwise products of a weight-``a`` and weight-``b`` sequence."""

    n: int
    a: int
    b: int
    weights: tuple[int, ...]

    def __contains__(self, w: int) -> bool:
        return w in self.weights

    def __iter__(self):
        return iter(self.weights)


def product_support(n: int, a: int, b: int) -> ProductSupport:
    """All weights occurring among products of the weight-``a`` and weight-``b`` classes.

    The support is an arithmetic progression of step 2.  After ordering the
    pair and, when a + b exceeds n, replacing both weights by their
    complements (which negates both factors and so fixes the product), the
    progression starts at n - a - b and has a + 1 terms.
    """
    if n < 1:
        raise InputError(f"length must be positive, got {n}")
    for w, what in ((a, "weight a"), (b, "weight b")):
        _check_index(n, w, what)
    lo, hi = min(a, b), max(a, b)
    if lo + hi > n:
        lo, hi = n - hi, n - lo
    weights = tuple(n - lo - hi + 2 * s for s in range(lo + 1))
    return ProductSupport(n, a, b, weights)


def half_split_pairs(n: int, a: int) -> tuple[tuple[int, int], ...]:
    """Ways a weight-``a`` sequence of even length ``n`` splits across its two halves.

    Each pair (i, a - i) gives the weights landing on the first and second
    half; both entries are bounded by the half length.
    """
    if n < 2 or n % 2:
        raise InputError(f"length must be even and positive, got {n}")
    _check_index(n, a, "weight a")
    half = n // 2
    return tuple((i, a - i) for i in range(a + 1) if i <= half and a - i <= half)


@dataclass(frozen=True)
class ParityPartition:
    """The even-weight and odd-weight halves of the length-``n`` sequence group."""

    n: int
    even_weights: tuple[int, ...]
    odd_weights: tuple[int, ...]
    even_order: int
    odd_order: int
    even_is_group: bool
    odd_is_group: bool


def partition_parity_sets(n: int) -> ParityPartition:
    """Split all weights by parity and report which half is closed under products.

    Both halves have 2**(n-1) sequences.  The product of two sequences whose
    weights have the same parity has weight congruent to n mod 2, so the
    even half is a subgroup exactly when n is even and the odd half exactly
    when n is odd.
    """
    if n < 1:
        raise InputError(f"length must be positive, got {n}")
    evens = tuple(w for w in range(n + 1) if w % 2 == 0)
    odds = tuple(w for w in range(n + 1) if w % 2 == 1)
    even_order = sum(math.comb(n, w) for w in evens)
    odd_order = sum(math.comb(n, w) for w in odds)
    return ParityPartition(
        n=n,
        even_weights=evens,
        odd_weights=odds,
        even_order=even_order,
        odd_order=odd_order,
        even_is_group=(n % 2 == 0),
        odd_is_group=(n % 2 == 1),
    )


def admissible_weight_band(n: int) -> tuple[int, int]:
    """Inclusive weight range [n/4, 3n/4] that candidate classes must come from."""
    if n < 4 or n % 4:
        raise InputError(f"length must be a positive multiple of 4, got {n}")
    t = n // 4
    return (t, 3 * t)


@dataclass(frozen=True)
class MaximalSSet:
    """A maximal family of weight classes whose products all reach the middle class."""

    n: int
    members: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def parity(self) -> str:
        return "even" if self.members[0] % 2 == 0 else "odd"


def _middle_weights(n: int) -> tuple[int, ...]:
    """Weights of the largest classes (unique for even n, a tied pair for odd)."""
    best = max(math.comb(n, w) for w in range(n + 1))
    return tuple(w for w in range(n + 1) if math.comb(n, w) == best)


def complete_maximal_ssets(
    n: int,
    parity: str | None = None,
    strict_pairs: bool = False,
    exclusion_scope: str = "band",
) -> tuple[MaximalSSet, ...]:
    """Enumerate the maximal qualifying families of weight classes.

    A family M of weights from the admissible band qualifies when every
    pairwise product support within M (diagonal included) contains the
    middle weight n/2, and no outside class c undoes that: c is disqualifying
    if for some a, b in M the support of (c, a) contains b while the support
    of (c, c) contains a.  The returned families are the inclusion-maximal
    qualifying ones, sorted by size then members.

    ``exclusion_scope`` controls where disqualifying classes are drawn from:
    "band" (default) restricts them to the admissible band, "all" allows any
    weight.  ``strict_pairs`` instead demands the middle weight in *every*
    pairwise support over all classes, which no family survives; the flag
    exists so that reading of the qualification rule stays testable.
    ``parity`` ("even"/"odd") filters the census to one parity class.
    """
    lo, hi = admissible_weight_band(n)
    if parity not in (None, "even", "odd"):
        raise InputError(f"parity must be 'even' or 'odd', got {parity!r}")
    if exclusion_scope not in ("band", "all"):
        raise InputError(f"exclusion_scope must be 'band' or 'all', got {exclusion_scope!r}")
    band = range(lo, hi + 1)
    mid = n // 2

    if strict_pairs:
        everything = range(n + 1)
        if not all(
            mid in product_support(n, a, b) for a in everything for b in everything
        ):
            return ()

    supports = {
        (a, b): set(product_support(n, a, b).weights)
        for a in range(n + 1)
        for b in range(n + 1)
    }
    scope = band if exclusion_scope == "band" else range(n + 1)

    qualifying: list[frozenset] = []
    for r in range(1, len(band) + 1):
        for members in combinations(band, r):
            if not all(mid in supports[a, b] for a in members for b in members):
                continue
            mset = frozenset(members)
            blocked = any(
                b in supports[c, a] and a in supports[c, c]
                for c in scope
                if c not in mset
                for a in members
                for b in members
            )
            if not blocked:
                qualifying.append(mset)

    maximal = [m for m in qualifying if not any(m < other for other in qualifying)]
    found = sorted((tuple(sorted(m)) for m in maximal), key=lambda t: (len(t), t))
    out = tuple(MaximalSSet(n, members) for members in found)
    if parity is not None:
        want = 0 if parity == "even" else 1
        out = tuple(s for s in out if all(w % 2 == want for w in s.members))
    return out
