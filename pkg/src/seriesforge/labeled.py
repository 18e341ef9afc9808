"""Counting families for rooted multipartite labeled series-reduced trees.

The weighted generating function P(m,t,x) is computed three independent
ways (global inversion, per-root-color recurrence, closed-form inversion),
and the specializations give the ultrametric / fully-colored / mobile /
chain-increasing / process counts, either as exact integers or as
polynomials in the number of colors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Union

from .bell import (
    CoeffSeq,
    assoc_stirling2,
    bell_inverse_recursive,
    bell_partial,
    derangement_count,
)
from .egf import ExpSeries
from .rings import QQ, PolyVar, factorial, poly_ring
from .weights import WEIGHT_RING, WeightPoly

POLY_M = poly_ring("m")
_M = PolyVar.gen("m")


@dataclass(frozen=True)
class DegreeSpec:
    """Assignment of the degree-function coefficients x_{c,k}.

    kind "symbolic" keeps x_{c,k} as indeterminates; "ones" sets them all
    to 1 (plain tree counting); "factorial" sets x_{c,k} = (k-1)! (mobile
    counting).  A custom callable (c, k) -> int overrides the kind.
    The coefficient of t in every degree function is fixed at 1.
    """

    m: int
    kind: str = "symbolic"
    custom: Optional[Callable[[int, int], int]] = None

    def value(self, c: int, k: int) -> WeightPoly:
        if self.custom is not None:
            return WeightPoly.const(self.custom(c, k))
        if self.kind == "symbolic":
            return WeightPoly.gen(c, k)
        if self.kind == "ones":
            return WeightPoly.const(1)
        if self.kind == "factorial":
            return WeightPoly.const(factorial(k - 1))
        raise ValueError(f"unknown degree spec kind: {self.kind}")


# ---------------------------------------------------------------------------
# The weighted generating function, three ways.
# ---------------------------------------------------------------------------

def p_series(spec: DegreeSpec, order: int) -> ExpSeries:
    """P(m,t,x) as the inverse of t + sum_c (inverse degree function - t)."""
    ring = WEIGHT_RING
    f = [ring.one] + [ring.zero] * (order - 1)
    for c in range(1, spec.m + 1):
        xc = CoeffSeq(ring, [ring.one] + [spec.value(c, k) for k in range(2, order + 1)])
        inv = bell_inverse_recursive(xc)
        for n in range(2, order + 1):
            f[n - 1] = f[n - 1] + inv[n]
    p = bell_inverse_recursive(CoeffSeq(ring, f))
    return ExpSeries.from_tail(p)


def p_series_by_color_recursion(spec: DegreeSpec, order: int) -> ExpSeries:
    """P(m,t,x) by the root-color recurrence.

    For each color c, trees with root color c are a root vertex of
    out-degree k >= 2 over a forest of subtrees whose roots avoid c; the
    forests are counted by Bell polynomials in the complementary weights.
    """
    ring = WEIGHT_RING
    m = spec.m
    total = [None, ring.one]            # total[s] = P_s(m, x)
    by_color = {c: [None, None] for c in range(1, m + 1)}
    memos = {c: {} for c in range(1, m + 1)}
    for s in range(2, order + 1):
        level_sum = ring.zero
        for c in range(1, m + 1):
            # forest component weights: a singleton block is a bare leaf
            comp = [ring.one] + [total[j] - by_color[c][j] for j in range(2, s)]
            acc = ring.zero
            for k in range(2, s + 1):
                acc = acc + spec.value(c, k) * bell_partial(
                    s, k, comp, ring, _memo=memos[c]
                )
            by_color[c].append(acc)
            level_sum = level_sum + acc
        total.append(level_sum)
    return ExpSeries(ring, [ring.zero] + total[1:])


def _closed_inverse_coeffs(spec: DegreeSpec, c: int, s: int) -> list:
    """Coefficients (x_c^<-1>)_j for j = 1..s by the closed-form formula."""
    ring = WEIGHT_RING
    shifted = [ring.zero] + [spec.value(c, k) for k in range(2, s + 1)]
    memo: dict = {}
    out = [ring.one]
    for j in range(2, s + 1):
        acc = ring.zero
        for k in range(1, j):
            term = bell_partial(j + k - 1, k, shifted, ring, _memo=memo)
            acc = acc + (-term if k % 2 else term)
        out.append(acc)
    return out


def p_closed_form(spec: DegreeSpec, s: int) -> WeightPoly:
    """P_s(m,x) by the alternating closed-form inversion."""
    ring = WEIGHT_RING
    if s < 1:
        raise ValueError("s must be >= 1")
    sums = [ring.zero] * (s + 1)        # sums[j] = sum_c (x_c^<-1>)_j
    for c in range(1, spec.m + 1):
        inv = _closed_inverse_coeffs(spec, c, s)
        for j in range(2, s + 1):
            sums[j] = sums[j] + inv[j - 1]
    shifted = [ring.zero] + [sums[j] for j in range(2, s + 1)]
    memo: dict = {}
    acc = ring.zero
    for k in range(s + 1):
        term = bell_partial(s + k - 1, k, shifted, ring, _memo=memo)
        acc = acc + (-term if k % 2 else term)
    return acc


# ---------------------------------------------------------------------------
# Ultrametrics / plain multipartite labeled trees.
# ---------------------------------------------------------------------------

def count_ultrametrics(s: int, m: int) -> int:
    """Number of symbolic ultrametrics on s points with m symbols.

    Equals the number of m-partite labeled series-reduced trees with s
    leaves, via the alternating derangement-number sum.
    """
    if s < 1 or m < 1:
        raise ValueError("need s >= 1 and m >= 1")
    total = 0
    for k in range(s + 1):
        total += (-m) ** k * derangement_count(s + k - 1, k)
    return (-1) ** (s - 1) * total


def a_polynomial(s: int) -> PolyVar:
    """The tree count for s leaves as a polynomial in the color count m."""
    if s < 1:
        raise ValueError("s must be >= 1")
    sign = (-1) ** (s - 1)
    coeffs = [
        sign * (-1) ** k * derangement_count(s + k - 1, k)
        for k in range(s + 1)
    ]
    return PolyVar(coeffs, "m")


def ultrametric_series_polynomials(up_to_s: int) -> list:
    """a_s(m) for s = 1..up_to_s via one symbolic series inversion.

    Inverts t(1-m) + m*log(1+t) over the polynomial ring in m; an
    independent route to the same polynomials as a_polynomial.
    """
    ring = POLY_M
    tail = [ring.one] + [
        (-1) ** (n - 1) * factorial(n - 1) * _M for n in range(2, up_to_s + 1)
    ]
    inv = bell_inverse_recursive(CoeffSeq(ring, tail))
    return [inv[s] for s in range(1, up_to_s + 1)]


def count_fully_colored_labeled(s: int, m: int) -> int:
    """Labeled m-partite series-reduced trees with colored leaves too.

    A lone vertex (s = 1) has no neighbor, so it takes any of the m
    colors; for s > 1 every leaf has exactly one parent, leaving m - 1
    color choices per leaf.
    """
    if s < 1 or m < 1:
        raise ValueError("need s >= 1 and m >= 1")
    if s == 1:
        return m
    return (m - 1) ** s * count_ultrametrics(s, m)


def labeled_series(m: int, order: int) -> ExpSeries:
    """A(m,t): exponential series of the labeled m-partite tree counts."""
    return ExpSeries(
        QQ, [Fraction(0)] + [Fraction(count_ultrametrics(s, m)) for s in range(1, order + 1)]
    )


def verify_integral_relation(m: int, order: int) -> bool:
    """Check 1 + A = 1 + (1 + A)^m * integral of (1 + A)^{-m}, to order."""
    if m < 1 or order < 2:
        raise ValueError("need m >= 1 and order >= 2")
    cal_a = labeled_series(m, order).add_const(Fraction(1))
    rhs = ExpSeries.one(QQ, order) + cal_a.pow(m) * cal_a.pow(-m).integrate()
    return cal_a.coeffs == rhs.coeffs


# ---------------------------------------------------------------------------
# Mobiles (circular trees).
# ---------------------------------------------------------------------------

def count_mobiles(s: int, m: int) -> int:
    """Labeled m-partite series-reduced mobiles with s leaves.

    Same alternating sum as the ultrametric count, with associated
    Stirling numbers of the second kind in place of derangement numbers.
    """
    if s < 1 or m < 1:
        raise ValueError("need s >= 1 and m >= 1")
    total = 0
    for k in range(s + 1):
        total += (-m) ** k * assoc_stirling2(s + k - 1, k)
    return (-1) ** (s - 1) * total


def mobiles_polynomial(s: int) -> PolyVar:
    """The mobile count for s leaves as a polynomial in m."""
    if s < 1:
        raise ValueError("s must be >= 1")
    sign = (-1) ** (s - 1)
    coeffs = [
        sign * (-1) ** k * assoc_stirling2(s + k - 1, k) for k in range(s + 1)
    ]
    return PolyVar(coeffs, "m")


def mobiles_series_polynomials(up_to_s: int) -> list:
    """g_s(m) for s = 1..up_to_s by inverting t(1-m) + m(1 - e^{-t})."""
    ring = POLY_M
    tail = [ring.one] + [
        (-1) ** (n + 1) * _M for n in range(2, up_to_s + 1)
    ]
    inv = bell_inverse_recursive(CoeffSeq(ring, tail))
    return [inv[s] for s in range(1, up_to_s + 1)]


def mobiles_series(m: int, order: int) -> ExpSeries:
    """G(m,t): exponential series of the mobile counts."""
    return ExpSeries(
        QQ, [Fraction(0)] + [Fraction(count_mobiles(s, m)) for s in range(1, order + 1)]
    )


# ---------------------------------------------------------------------------
# Chain-increasing binary trees and parallel processes.
# ---------------------------------------------------------------------------

def chain_increasing_polynomial(s: int) -> PolyVar:
    """Number of chain-increasing binary trees with s chains, as a
    polynomial in the junction color count.

    Recurrence: the count for s chains is the count for s - 1 (unary
    root) plus (colors) * B_{s,2} over the smaller counts (binary root).
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    ring = POLY_M
    y = [ring.one]
    for n in range(2, s + 1):
        y.append(y[-1] + _M * bell_partial(n, 2, y, ring))
    return y[s - 1]


def chain_increasing_count(s: int, m: Optional[int] = None) -> Union[int, PolyVar]:
    """y_s(m); with m None the symbolic polynomial is returned."""
    poly = chain_increasing_polynomial(s)
    if m is None:
        return poly
    if m < 0:
        raise ValueError("m must be >= 0")
    return poly.eval_at(m)


def chain_increasing_series(m: int, order: int) -> ExpSeries:
    """Y(m,t): exponential series of the chain-increasing counts."""
    return ExpSeries(
        QQ,
        [Fraction(0)]
        + [Fraction(chain_increasing_count(s, m)) for s in range(1, order + 1)],
    )


def count_processes(s: int) -> int:
    """Increasingly labeled parallel processes with s actions.

    Equals the 2-colored chain-increasing count and the 3-partite labeled
    tree count: an alternating derangement sum at m = 3.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    total = 0
    for k in range(s + 1):
        total += (-3) ** k * derangement_count(s + k - 1, k)
    return (-1) ** (s - 1) * total
