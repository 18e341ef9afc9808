from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from seriesforge.rings import QQ, PolyVar, binomial, factorial, poly_ring


def pascal(n, k):
    # independent oracle: Pascal's triangle
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row[k] if 0 <= k <= n else 0


def test_factorial_values():
    assert factorial(0) == 1
    assert factorial(5) == 120
    acc = 1
    for i in range(1, 11):
        acc *= i
    assert factorial(10) == acc == 3628800


def test_factorial_recurrence():
    for n in range(1, 31):
        assert factorial(n) == n * factorial(n - 1)


def test_factorial_negative():
    with pytest.raises(ValueError):
        factorial(-1)


@pytest.mark.parametrize("n,k,expected", [(4, 2, 6), (7, 0, 1), (9, 4, 126), (3, 5, 0)])
def test_binomial_values(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_matches_pascal():
    for n in range(10):
        for k in range(n + 2):
            assert binomial(n, k) == pascal(n, k)


class TestPolyVar:
    def test_substitute_identity(self):
        p = PolyVar([0, 1, 2], "t")
        assert p.substitute(1) == p

    def test_substitute_refined_example(self):
        # t + 2t^2 + 2t^3 with t -> t^2
        p = PolyVar([0, 1, 2, 2], "t")
        assert p.substitute(2) == PolyVar([0, 0, 1, 0, 2, 0, 2], "t")

    def test_substitute_zero(self):
        assert PolyVar([], "t").substitute(3) == PolyVar([], "t")

    def test_eval_examples(self):
        assert PolyVar([0, 1, 2, 2], "t").eval_at(1) == 5
        assert PolyVar([7, 3], "t").eval_at(0) == 7
        assert PolyVar([0, 1, 1], "t").eval_at(2) == 6

    def test_compose(self):
        p = PolyVar([0, 0, 1], "t")  # t^2
        q = PolyVar([-1, 1], "m")    # m - 1
        assert p.compose(q) == PolyVar([1, -2, 1], "m")

    def test_shift_down(self):
        assert PolyVar([0, 1, 2], "t").shift_down() == PolyVar([1, 2], "t")
        with pytest.raises(ArithmeticError):
            PolyVar([1, 1], "t").shift_down()

    def test_degree_of_product(self):
        p, q = PolyVar([1, 2, 3]), PolyVar([0, 5, 0, 7])
        assert (p * q).degree == p.degree + q.degree

    def test_trailing_zeros_trimmed(self):
        assert PolyVar([1, 0, 0]).coeffs == (1,)
        assert PolyVar([0, 0]).is_zero()

    @given(
        st.lists(st.integers(-9, 9), max_size=5),
        st.integers(1, 4),
        st.integers(-5, 5),
    )
    def test_substitute_consistent_with_eval(self, coeffs, d, x):
        p = PolyVar(coeffs, "t")
        assert p.substitute(d).eval_at(x) == p.eval_at(x ** d)


small_fraction = st.fractions(
    min_value=-10, max_value=10, max_denominator=12
)


@given(small_fraction, small_fraction, small_fraction)
def test_rational_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a + QQ.zero == a
    assert a * QQ.one == a
    assert a * b == b * a


small_poly = st.lists(st.integers(-9, 9), max_size=4).map(PolyVar)


@given(small_poly, small_poly, small_poly)
def test_poly_ring_axioms(a, b, c):
    ring = poly_ring("m")
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ring.zero == a
    assert a * ring.one == a
    assert a * b == b * a


def test_ring_invert():
    assert QQ.invert(Fraction(3, 4)) == Fraction(4, 3)
    ring = poly_ring("m")
    assert ring.invert(ring.one) == ring.one
    with pytest.raises(ArithmeticError):
        ring.invert(PolyVar([2]))
