"""Brute-force reference implementations used to validate the fast paths.

Everything here works symbol by symbol on small tuples of +1/-1 and is kept
deliberately independent of the packed-integer code in the rest of the
package: no shared popcount kernel, no shared binomial helper, no shared
enumeration.  The point is that a bug in the production modules cannot hide
by also living here.  Sizes are hard-capped because these routines are
exponential on purpose.
"""

import itertools
import random

from .errors import InputError

_STRUCTURE_CAP = 12
_SUPPORT_CAP = 12
_EXHAUSTIVE_CAP = 24
_SUM_IDENTITY_CAP = 14


def _weight(xs):
    return sum(1 for v in xs if v == 1)


def _mul(xs, ys):
    return tuple(a * b for a, b in zip(xs, ys))


def _paf(xs, k):
    n = len(xs)
    return sum(xs[i] * xs[(i + k) % n] for i in range(n))


def _weight_class(n, w):
    """All +1/-1 tuples of length n with exactly w entries equal to +1."""
    for support in itertools.combinations(range(n), w):
        yield tuple(1 if i in support else -1 for i in range(n))


def _as_string(xs):
    return "".join("+" if v == 1 else "-" for v in xs)


def bf_structure_constant(n, i, j, k):
    """Count pairs realising a basic-set product coefficient, checking uniformity.

    The coefficient is the number of X with i entries equal to -1 such that
    X*Z has j entries equal to -1, for Z any fixed sequence with k entries
    equal to -1.  The count is recomputed for every such Z and asserted
    identical before it is returned.
    """
    if n > _STRUCTURE_CAP:
        raise InputError(f"brute-force structure constants capped at n={_STRUCTURE_CAP}")
    for idx in (i, j, k):
        if not 0 <= idx <= n:
            raise InputError(f"basic-set index {idx} out of range for n={n}")
    x_class = list(_weight_class(n, n - i))
    counts = set()
    value = 0
    for z in _weight_class(n, n - k):
        count = sum(1 for x in x_class if _weight(_mul(x, z)) == n - j)
        counts.add(count)
        assert len(counts) == 1, (
            f"coefficient not uniform over the target class: n={n} (i,j,k)=({i},{j},{k}) "
            f"saw counts {sorted(counts)} at Z={_as_string(z)}"
        )
        value = count
    return value


def bf_product_support(n, a, b):
    """Weights that actually occur among pointwise products of the two classes."""
    if n > _SUPPORT_CAP:
        raise InputError(f"brute-force product support capped at n={_SUPPORT_CAP}")
    for w in (a, b):
        if not 0 <= w <= n:
            raise InputError(f"weight {w} out of range for n={n}")
    seen = set()
    for x in _weight_class(n, a):
        for y in _weight_class(n, b):
            seen.add(_weight(_mul(x, y)))
    return tuple(sorted(seen))


def bf_exhaustive_hadamard(n):
    """Every sequence whose periodic autocorrelation vanishes at all nonzero shifts.

    Returns sorted +/- strings.  Exponential sweep over all 2**n sequences.
    """
    if not 1 <= n <= _EXHAUSTIVE_CAP:
        raise InputError(f"exhaustive sweep capped at n={_EXHAUSTIVE_CAP}")
    hits = []
    for xs in itertools.product((1, -1), repeat=n):
        if all(_paf(xs, k) == 0 for k in range(1, n)):
            hits.append(_as_string(xs))
    hits.sort()
    return hits


def bf_correlation_sum_identity(n, sample_count=0, seed=0):
    """Check that the autocorrelations of a sequence sum to (2a - n)**2.

    With ``sample_count`` zero the check is exhaustive (capped at n=14);
    otherwise it draws that many random sequences.  Raises AssertionError
    with the offending sequence on failure, returns True otherwise.
    """
    if n < 1:
        raise InputError(f"sequence length must be positive, got {n}")
    if sample_count == 0:
        if n > _SUM_IDENTITY_CAP:
            raise InputError(
                f"exhaustive sum-identity check capped at n={_SUM_IDENTITY_CAP}; "
                "pass sample_count for larger n"
            )
        pool = itertools.product((1, -1), repeat=n)
    else:
        rng = random.Random(seed)
        pool = (
            tuple(rng.choice((1, -1)) for _ in range(n)) for _ in range(sample_count)
        )
    for xs in pool:
        total = sum(_paf(xs, k) for k in range(n))
        expect = (2 * _weight(xs) - n) ** 2
        assert total == expect, (
            f"correlation sum identity failed at {_as_string(xs)}: "
            f"sum={total} expected={expect}"
        )
    return True


def bf_binomial(n, k):
    """Binomial coefficient by Pascal's rule, independent of math.comb."""
    if k < 0 or k > n:
        return 0
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row[k]


def bf_search_space_size(m):
    """Reduced and unreduced candidate counts for the weight-constrained search.

    Big-integer evaluation from scratch via bf_binomial so the production
    count has something independent to agree with.
    """
    if m < 1 or m % 2 == 0:
        raise InputError(f"search sizing needs odd m >= 1, got {m}")
    half = 2 * m * m
    lo = (m * m - m) // 2
    hi = (3 * m * m - m) // 2
    reduced = 2 * sum(
        bf_binomial(half, a) * bf_binomial(half, half - m - a) for a in range(lo, hi + 1)
    )
    unreduced = 2 * bf_binomial(2 * half, half - m)
    return reduced, unreduced
