import math

import pytest
from hypothesis import given, settings, strategies as st

from hadring import oracle, schur
from hadring.errors import InputError
from hadring.seqcore import BitSequence, pointwise_mul, weight


def test_structure_constant_frozen_values():
    assert schur.structure_constant(2, 1, 1, 0) == 2
    assert schur.structure_constant(4, 2, 2, 2) == 4
    assert schur.structure_constant(4, 1, 2, 0) == 0
    assert schur.structure_constant_by_weights(8, 8, 3, 3) == 1
    assert schur.structure_constant_by_weights(2, 1, 1, 2) == 2


def test_structure_constant_validation():
    with pytest.raises(InputError):
        schur.structure_constant(4, 5, 0, 0)
    with pytest.raises(InputError):
        schur.structure_constant(0, 0, 0, 0)
    with pytest.raises(InputError):
        schur.structure_constant_by_weights(4, -1, 0, 0)


def test_structure_constant_query_type():
    q = schur.StructureConstantQuery(4, 2, 2, 2)
    assert q.evaluate() == 4
    assert q.evaluate() == schur.structure_constant(4, 2, 2, 2)
    with pytest.raises(InputError):
        schur.StructureConstantQuery(4, 5, 0, 0)
    with pytest.raises(InputError):
        schur.StructureConstantQuery(0, 0, 0, 0)


def test_structure_constant_matches_oracle_exhaustively():
    for n in range(1, 7):
        for i in range(n + 1):
            for j in range(n + 1):
                for k in range(n + 1):
                    assert schur.structure_constant(n, i, j, k) == oracle.bf_structure_constant(
                        n, i, j, k
                    ), (n, i, j, k)


def test_parity_vanishing():
    # products of same-parity classes never land on the opposite parity
    for n in range(1, 9):
        for i in range(n + 1):
            for j in range(n + 1):
                for k in range(n + 1):
                    if (i + j - k) % 2:
                        assert schur.structure_constant(n, i, j, k) == 0


@given(st.integers(1, 10).flatmap(lambda n: st.tuples(*[st.just(n)] + [st.integers(0, n)] * 3)))
def test_structure_constant_symmetric_in_factors(nijk):
    n, i, j, k = nijk
    assert schur.structure_constant(n, i, j, k) == schur.structure_constant(n, j, i, k)


def test_row_sums_count_the_class():
    # with Z fixed, every X in class i lands somewhere: summing the count of
    # X taking X*Z into class j, over all j, recovers |class i|
    for n in range(1, 8):
        for i in range(n + 1):
            for k in range(n + 1):
                total = sum(schur.structure_constant(n, i, j, k) for j in range(n + 1))
                assert total == math.comb(n, i)


def test_product_support_frozen_values():
    assert schur.product_support(4, 1, 1).weights == (2, 4)
    assert schur.product_support(4, 2, 2).weights == (0, 2, 4)
    assert schur.product_support(6, 6, 2).weights == (2,)
    assert 2 in schur.product_support(4, 1, 1)
    assert 3 not in schur.product_support(4, 1, 1)


def test_product_support_matches_oracle_exhaustively():
    for n in range(1, 8):
        for a in range(n + 1):
            for b in range(n + 1):
                assert schur.product_support(n, a, b).weights == oracle.bf_product_support(
                    n, a, b
                ), (n, a, b)


@given(
    st.integers(1, 12).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.integers(0, (1 << n) - 1),
            st.integers(0, (1 << n) - 1),
        )
    )
)
@settings(max_examples=200)
def test_actual_products_land_in_support(nxy):
    n, xb, yb = nxy
    x, y = BitSequence(n, xb), BitSequence(n, yb)
    support = schur.product_support(n, weight(x), weight(y))
    assert weight(pointwise_mul(x, y)) in support


def test_half_split_pairs():
    assert schur.half_split_pairs(4, 2) == ((0, 2), (1, 1), (2, 0))
    assert schur.half_split_pairs(8, 6) == ((2, 4), (3, 3), (4, 2))
    assert schur.half_split_pairs(6, 0) == ((0, 0),)
    with pytest.raises(InputError):
        schur.half_split_pairs(5, 2)
    with pytest.raises(InputError):
        schur.half_split_pairs(4, 5)


def test_half_split_vandermonde():
    for n in range(2, 25, 2):
        half = n // 2
        for a in range(n + 1):
            pairs = schur.half_split_pairs(n, a)
            assert all(0 <= i <= half and 0 <= j <= half for i, j in pairs)
            assert sum(math.comb(half, i) * math.comb(half, j) for i, j in pairs) == math.comb(
                n, a
            )


def test_parity_partition():
    for n in range(1, 12):
        part = schur.partition_parity_sets(n)
        assert part.even_order == part.odd_order == 2 ** (n - 1)
        assert part.even_is_group == (n % 2 == 0)
        assert part.odd_is_group == (n % 2 == 1)
        assert set(part.even_weights) | set(part.odd_weights) == set(range(n + 1))


def test_admissible_weight_band():
    assert schur.admissible_weight_band(4) == (1, 3)
    assert schur.admissible_weight_band(36) == (9, 27)
    with pytest.raises(InputError):
        schur.admissible_weight_band(6)


def test_maximal_ssets_census():
    census4 = schur.complete_maximal_ssets(4)
    assert [(s.members, s.order) for s in census4] == [((2,), 1), ((1, 3), 2)]
    assert [s.parity for s in census4] == ["even", "odd"]

    census8 = schur.complete_maximal_ssets(8)
    assert [s.members for s in census8] == [(3, 5), (2, 4, 6)]

    census12 = schur.complete_maximal_ssets(12)
    assert [s.members for s in census12] == [(4, 6, 8), (3, 5, 7, 9)]


def test_maximal_ssets_follow_band_pattern():
    for n in (4, 8, 12):
        t = n // 4
        census = schur.complete_maximal_ssets(n)
        assert sorted(s.order for s in census) == [t, t + 1]
        lo, hi = schur.admissible_weight_band(n)
        assert all(lo <= w <= hi for s in census for w in s.members)


def test_maximal_ssets_parity_filter():
    assert [s.members for s in schur.complete_maximal_ssets(8, parity="even")] == [(2, 4, 6)]
    assert [s.members for s in schur.complete_maximal_ssets(8, parity="odd")] == [(3, 5)]


def test_maximal_ssets_strict_pairs_is_empty():
    # demanding the middle class in every support over the whole ring kills
    # every candidate; the flag documents that reading rather than using it
    for n in (4, 8):
        assert schur.complete_maximal_ssets(n, strict_pairs=True) == ()


def test_maximal_ssets_exclusion_scope_all():
    # widening the disqualifier pool past the band loses the even family at n=12
    members = [s.members for s in schur.complete_maximal_ssets(12, exclusion_scope="all")]
    assert members == [(3, 5, 7, 9)]


def test_maximal_ssets_validation():
    with pytest.raises(InputError):
        schur.complete_maximal_ssets(6)
    with pytest.raises(InputError):
        schur.complete_maximal_ssets(4, parity="both")
    with pytest.raises(InputError):
        schur.complete_maximal_ssets(4, exclusion_scope="ring")
