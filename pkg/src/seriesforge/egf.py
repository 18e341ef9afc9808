"""Truncated exponential generating functions.

An ExpSeries stores c_0..c_N of sum c_n t^n/n!.  Composition and
compositional inversion delegate to the coefficient-sequence group in
:mod:`seriesforge.bell`; multiplication, powers and formal integration are
the standard exponential-convolution operations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .bell import CoeffSeq, bell_inverse_recursive, bell_product
from .rings import QQ, Ring, binomial, factorial


@dataclass(frozen=True)
class ExpSeries:
    """Exponential series truncated at t^order / order!."""

    ring: Ring
    coeffs: tuple  # c_0 .. c_N

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("series needs at least the constant term")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        if n < 0:
            raise IndexError("negative coefficient index")
        if n >= len(self.coeffs):
            return self.ring.zero
        return self.coeffs[n]

    def tail(self) -> CoeffSeq:
        """Coefficients c_1..c_N as a group element (c_0 dropped)."""
        return CoeffSeq(self.ring, self.coeffs[1:])

    @classmethod
    def from_tail(cls, seq: CoeffSeq, c0=None) -> "ExpSeries":
        c0 = seq.ring.zero if c0 is None else c0
        return cls(seq.ring, (c0,) + seq.values)

    @classmethod
    def zero(cls, ring: Ring, order: int) -> "ExpSeries":
        return cls(ring, [ring.zero] * (order + 1))

    @classmethod
    def one(cls, ring: Ring, order: int) -> "ExpSeries":
        return cls(ring, [ring.one] + [ring.zero] * order)

    @classmethod
    def identity(cls, ring: Ring, order: int) -> "ExpSeries":
        """The series t."""
        c = [ring.zero] * (order + 1)
        if order >= 1:
            c[1] = ring.one
        return cls(ring, c)

    def truncate(self, order: int) -> "ExpSeries":
        if order >= self.order:
            return self
        return ExpSeries(self.ring, self.coeffs[: order + 1])

    # ---- linear structure -------------------------------------------------

    def __add__(self, other: "ExpSeries") -> "ExpSeries":
        n = min(self.order, other.order)
        return ExpSeries(self.ring, [self[i] + other[i] for i in range(n + 1)])

    def __sub__(self, other: "ExpSeries") -> "ExpSeries":
        n = min(self.order, other.order)
        return ExpSeries(self.ring, [self[i] - other[i] for i in range(n + 1)])

    def __neg__(self) -> "ExpSeries":
        return ExpSeries(self.ring, [-c for c in self.coeffs])

    def scale(self, a) -> "ExpSeries":
        return ExpSeries(self.ring, [a * c for c in self.coeffs])

    def add_const(self, a) -> "ExpSeries":
        return ExpSeries(self.ring, (self.coeffs[0] + a,) + self.coeffs[1:])

    # ---- multiplicative structure -----------------------------------------

    def mul(self, other: "ExpSeries") -> "ExpSeries":
        n = min(self.order, other.order)
        out = []
        for s in range(n + 1):
            acc = self.ring.zero
            for i in range(s + 1):
                a, b = self[i], other[s - i]
                if a == self.ring.zero or b == self.ring.zero:
                    continue
                acc = acc + binomial(s, i) * a * b
            out.append(acc)
        return ExpSeries(self.ring, out)

    __mul__ = mul

    def reciprocal(self) -> "ExpSeries":
        """1/f for a series with invertible constant term."""
        inv0 = self.ring.invert(self.coeffs[0])
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = self.ring.zero
            for i in range(1, n + 1):
                a = self[i]
                if a == self.ring.zero:
                    continue
                acc = acc + binomial(n, i) * a * out[n - i]
            out.append(-inv0 * acc)
        return ExpSeries(self.ring, out)

    def pow(self, k: int) -> "ExpSeries":
        """f**k; negative k is reciprocal-then-positive-power."""
        if k < 0:
            return self.reciprocal().pow(-k)
        acc = ExpSeries.one(self.ring, self.order)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    # ---- calculus ---------------------------------------------------------

    def integrate(self) -> "ExpSeries":
        """Formal integral from 0; keeps the truncation order."""
        return ExpSeries(self.ring, (self.ring.zero,) + self.coeffs[:-1])

    def differentiate(self) -> "ExpSeries":
        return ExpSeries(self.ring, self.coeffs[1:] + (self.ring.zero,))

    # ---- composition group ------------------------------------------------

    def compose(self, inner: "ExpSeries") -> "ExpSeries":
        """f(g) for g with zero constant term; c_0 of the result is f.c_0."""
        if inner[0] != inner.ring.zero:
            raise ValueError("composition argument must have zero constant term")
        seq = bell_product(self.tail(), inner.tail())
        return ExpSeries.from_tail(seq, self.coeffs[0])

    def invert(self) -> "ExpSeries":
        """Compositional inverse; needs c_0 = 0 and c_1 a unit."""
        if self[0] != self.ring.zero:
            raise ValueError("inversion needs zero constant term")
        return ExpSeries.from_tail(bell_inverse_recursive(self.tail()))

    # ---- serialization ----------------------------------------------------

    def to_json(self) -> str:
        """Exact-rational JSON: {"order": N, "coeffs": ["num/den", ...]}."""
        strs = []
        for c in self.coeffs:
            f = Fraction(c)
            strs.append(f"{f.numerator}/{f.denominator}")
        return json.dumps({"order": self.order, "coeffs": strs})


NAMED_SERIES = ("exp_minus_one", "log1p", "neg_log_one_minus",
                "one_minus_exp_neg", "identity")


def make_named(name: str, order: int) -> ExpSeries:
    """Stock rational series used by the counting specializations.

    exp_minus_one:      e^t - 1            (coefficients 1, 1, 1, ...)
    log1p:              log(1 + t)         ((-1)^{n-1} (n-1)!)
    neg_log_one_minus:  -log(1 - t)        ((n-1)!)
    one_minus_exp_neg:  1 - e^{-t}         ((-1)^{n+1})
    identity:           t
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if name == "exp_minus_one":
        tail = [Fraction(1)] * order
    elif name == "log1p":
        tail = [Fraction((-1) ** (n - 1) * factorial(n - 1)) for n in range(1, order + 1)]
    elif name == "neg_log_one_minus":
        tail = [Fraction(factorial(n - 1)) for n in range(1, order + 1)]
    elif name == "one_minus_exp_neg":
        tail = [Fraction((-1) ** (n + 1)) for n in range(1, order + 1)]
    elif name == "identity":
        return ExpSeries.identity(QQ, order)
    else:
        raise ValueError(f"unknown series name: {name}")
    return ExpSeries(QQ, [Fraction(0)] + tail)
