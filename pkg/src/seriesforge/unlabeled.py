"""Rooted unlabeled series-reduced trees: the refined leaf/inner-vertex
triangle, the total counts, and the multipartite and fully-colored
specializations.

The refinement polynomial for s leaves has the number of trees with k
inner vertices as its t^k coefficient; the divisor-sum recurrence builds
them bottom-up with rational intermediates and an integrality assertion
at the end of each level.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .bell import bell_partial
from .rings import PolyVar, factorial, poly_ring_q

POLY_T_Q = poly_ring_q("t")


def refined_polys(up_to_s: int) -> list:
    """Refinement polynomials for s = 1..up_to_s (integer coefficients).

    Level s is t/s! times a Bell-polynomial sum over the weights
    w_n = n! * sum over divisors d of n, n/d != s, of (1/d) * (level n/d
    with t -> t^d).
    """
    if up_to_s < 1:
        raise ValueError("up_to_s must be >= 1")
    ring = POLY_T_Q
    levels = [PolyVar([1], "t")]        # s = 1: a bare leaf, zero inner vertices
    for s in range(2, up_to_s + 1):
        weights = []
        for n in range(1, s + 1):
            w = ring.zero
            for d in range(1, n + 1):
                if n % d:
                    continue
                if n // d == s:
                    continue
                w = w + Fraction(1, d) * levels[n // d - 1].substitute(d).map_coeffs(Fraction)
            weights.append(factorial(n) * w)
        memo: dict = {}
        acc = ring.zero
        for j in range(1, s + 1):
            acc = acc + bell_partial(s, j, weights, ring, _memo=memo)
        poly = (PolyVar([0, Fraction(1)], "t") * acc).map_coeffs(
            lambda c: c / factorial(s)
        )
        ints = []
        for c in poly.coeffs:
            if c.denominator != 1:
                raise ArithmeticError(
                    f"refined recurrence produced non-integer at s={s}: {poly!r}"
                )
            ints.append(int(c))
        levels.append(PolyVar(ints, "t"))
    return levels[:up_to_s]


@lru_cache(maxsize=None)
def _refined(s: int) -> PolyVar:
    return refined_polys(s)[s - 1]


def refined_poly(s: int) -> PolyVar:
    """Refinement polynomial for a single leaf count."""
    if s < 1:
        raise ValueError("s must be >= 1")
    return _refined(s)


def unlabeled_count(s: int) -> int:
    """Total rooted unlabeled series-reduced trees with s leaves."""
    return refined_poly(s).eval_at(1)


def multipartite_unlabeled(s: int, m: int) -> int:
    """m-partite (inner vertices colored, adjacent distinct) tree count.

    Computed as m * q(m - 1) where q is the refinement polynomial with
    one factor of t removed; this form is finite at m = 1.
    """
    if s < 1 or m < 1:
        raise ValueError("need s >= 1 and m >= 1")
    if s == 1:
        return 1
    q = refined_poly(s).shift_down()
    return m * q.eval_at(m - 1)


def multipartite_unlabeled_polynomial(s: int) -> PolyVar:
    """The m-partite unlabeled count expanded as a polynomial in m."""
    if s < 1:
        raise ValueError("s must be >= 1")
    if s == 1:
        return PolyVar([1], "m")
    q = refined_poly(s).shift_down()
    m = PolyVar.gen("m")
    return m * q.compose(m - 1)


def fully_colored_unlabeled(s: int, m: int) -> int:
    """Unlabeled m-partite trees with leaves colored as well."""
    if s < 1 or m < 1:
        raise ValueError("need s >= 1 and m >= 1")
    if s == 1:
        return m
    return m * (m - 1) ** (s - 1) * refined_poly(s).eval_at(m - 1)


def riordan_triangle(max_n: int) -> dict:
    """Triangle of counts by (inner vertices k, leaves n), n = 2..max_n.

    Returns {(k, n): count} for the nonzero cells, matching the layout
    rows k = 1..max_n - 1, columns n = 2..max_n.
    """
    out = {}
    polys = refined_polys(max_n)
    for n in range(2, max_n + 1):
        p = polys[n - 1]
        for k in range(1, n):
            v = p[k]
            if v:
                out[(k, n)] = v
    return out
