from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from seriesforge.bell import (
    CoeffSeq,
    assoc_stirling2,
    bell_identity,
    bell_inverse_closed,
    bell_inverse_recursive,
    bell_partial,
    bell_product,
    derangement_count,
    stirling2,
)
from seriesforge.egf import make_named
from seriesforge.oracle import (
    bell_partial_partition_sum,
    enum_derangements,
    enum_set_partitions_min_block,
    set_partitions,
)
from seriesforge.rings import QQ, ZZ, factorial


def rational_seq(values):
    return CoeffSeq(QQ, [Fraction(v) for v in values])


class TestBellPartial:
    def test_single_block(self):
        x = [3, 1, 4, 1, 5]
        for n in range(1, 6):
            assert bell_partial(n, 1, x, ZZ) == x[n - 1]

    def test_4_2_symbolic(self):
        # B_{4,2} = 3 x_2^2 + 4 x_1 x_3, from partitioning {1,2,3,4}
        # into 2 blocks
        for x1, x2, x3 in [(1, 2, 3), (5, 7, 11), (-2, 0, 4)]:
            expected = 0
            for part in set_partitions([1, 2, 3, 4]):
                if len(part) != 2:
                    continue
                term = 1
                for block in part:
                    term *= (x1, x2, x3)[len(block) - 1]
                expected += term
            assert expected == 3 * x2 ** 2 + 4 * x1 * x3
            assert bell_partial(4, 2, [x1, x2, x3], ZZ) == expected

    def test_zero_parts(self):
        assert bell_partial(0, 0, [], ZZ) == 1
        assert bell_partial(3, 0, [1, 1, 1], ZZ) == 0

    def test_out_of_range_k(self):
        assert bell_partial(2, 5, [1, 1], ZZ) == 0

    def test_all_ones_is_stirling2(self):
        # against a direct set-partition counter
        for n in range(1, 9):
            for k in range(1, n + 1):
                direct = sum(
                    1 for p in set_partitions(list(range(n))) if len(p) == k
                )
                assert stirling2(n, k) == direct

    def test_matches_partition_sum_definition(self):
        x = [Fraction(v) for v in (1, -2, 3, 5, -1, 2, 4, 1)]
        for n in range(9):
            for k in range(n + 1):
                assert bell_partial(n, k, x, QQ) == bell_partial_partition_sum(
                    n, k, x, QQ
                )


class TestBellProduct:
    def test_identity_both_sides(self):
        x = rational_seq([2, -1, 3, 5, 7])
        e = bell_identity(QQ, 5)
        assert bell_product(x, e).values == x.values
        assert bell_product(e, x).values == x.values

    def test_matches_series_composition(self):
        # t^2/2! composed with e^t - 1 gives (e^t - 1)^2 / 2
        half_sq = CoeffSeq(QQ, [Fraction(0), Fraction(1)] + [Fraction(0)] * 6)
        expm1 = make_named("exp_minus_one", 8).tail()
        prod = bell_product(half_sq, expm1)
        direct = make_named("exp_minus_one", 8)
        direct = (direct * direct).scale(Fraction(1, 2))
        assert prod.values == direct.coeffs[1:]
        assert prod[3] == 3

    def test_ring_mismatch(self):
        x = rational_seq([1, 2])
        y = CoeffSeq(ZZ, (1, 2))
        with pytest.raises(ValueError):
            bell_product(x, y)


small_rational = st.fractions(min_value=-4, max_value=4, max_denominator=6)


def seqs(order, unit_lead=False):
    lead = st.just(Fraction(1)) if unit_lead else small_rational.filter(lambda v: v != 0)
    return st.tuples(
        lead, st.lists(small_rational, min_size=order - 1, max_size=order - 1)
    ).map(lambda t: CoeffSeq(QQ, [t[0]] + t[1]))


@settings(max_examples=40, deadline=None)
@given(seqs(7), seqs(7), seqs(7))
def test_bell_product_associative(x, y, z):
    lhs = bell_product(bell_product(x, y), z)
    rhs = bell_product(x, bell_product(y, z))
    assert lhs.values == rhs.values


@settings(max_examples=40, deadline=None)
@given(seqs(7), seqs(7), seqs(7))
def test_left_distributivity(f, g, h):
    lhs = bell_product(f + g, h)
    rhs = bell_product(f, h) + bell_product(g, h)
    assert lhs.values == rhs.values


@settings(max_examples=40, deadline=None)
@given(seqs(7))
def test_group_inverse_two_sided(x):
    inv = bell_inverse_recursive(x)
    e = bell_identity(QQ, x.order).values
    assert bell_product(x, inv).values == e
    assert bell_product(inv, x).values == e


@settings(max_examples=50, deadline=None)
@given(seqs(8, unit_lead=True))
def test_closed_equals_recursive(x):
    assert bell_inverse_closed(x).values == bell_inverse_recursive(x).values


class TestInversion:
    def test_expm1_gives_log1p(self):
        x = make_named("exp_minus_one", 8).tail()
        expected = make_named("log1p", 8).coeffs[1:]
        assert bell_inverse_recursive(x).values == expected
        assert bell_inverse_closed(x).values == expected

    def test_neg_log_gives_one_minus_exp_neg(self):
        x = make_named("neg_log_one_minus", 8).tail()
        expected = make_named("one_minus_exp_neg", 8).coeffs[1:]
        assert bell_inverse_recursive(x).values == expected
        assert bell_inverse_closed(x).values == expected

    def test_identity_self_inverse(self):
        e = bell_identity(QQ, 6)
        assert bell_inverse_recursive(e).values == e.values
        assert bell_inverse_closed(e).values == e.values

    def test_scaling(self):
        x = rational_seq([2, 0, 0, 0])
        expected = (Fraction(1, 2), Fraction(0), Fraction(0), Fraction(0))
        assert bell_inverse_recursive(x).values == expected
        assert bell_inverse_closed(x).values == expected

    def test_nonunit_lead_over_integer_ring(self):
        x = CoeffSeq(ZZ, (2, 1))
        with pytest.raises(ArithmeticError):
            bell_inverse_recursive(x)


class TestSpecialCounts:
    @pytest.mark.parametrize("n,k,expected", [(2, 1, 1), (3, 1, 2), (4, 2, 3)])
    def test_derangement_examples(self, n, k, expected):
        assert derangement_count(n, k) == expected

    def test_derangement_against_enumeration(self):
        for n in range(8):
            for k in range(n + 1):
                assert derangement_count(n, k) == enum_derangements(n, k)

    def test_derangement_totals(self):
        # sum over k equals the inclusion-exclusion total
        for n in range(1, 10):
            total = sum(derangement_count(n, k) for k in range(n + 1))
            incl_excl = sum(
                (-1) ** i * factorial(n) // factorial(i) for i in range(n + 1)
            )
            assert total == incl_excl

    @pytest.mark.parametrize("n,k,expected", [(2, 1, 1), (4, 2, 3), (3, 2, 0)])
    def test_assoc_stirling2_examples(self, n, k, expected):
        assert assoc_stirling2(n, k) == expected

    def test_assoc_stirling2_against_enumeration(self):
        for n in range(1, 9):
            for k in range(1, n + 1):
                assert assoc_stirling2(n, k) == enum_set_partitions_min_block(n, k, 2)
