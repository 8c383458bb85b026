"""Rational functions in canonical form: gcd-reduced, monic denominator."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .mpoly import DomainError, MPoly, Registry, poly_gcd, recip

QT: Registry = ("q", "t")
Q_ONLY: Registry = ("q",)


class RatFrac:
    """num/den with gcd(num, den) = 1 and den monic under grevlex."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: MPoly, den: MPoly, _normalized: bool = False):
        if num.registry != den.registry:
            raise TypeError("numerator/denominator registry mismatch")
        if den.is_zero():
            raise DomainError("zero denominator")
        if not _normalized:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_poly(p: MPoly) -> "RatFrac":
        return RatFrac(p, MPoly.const(p.registry, 1), _normalized=True)

    @staticmethod
    def const(registry: Registry, c) -> "RatFrac":
        return RatFrac.from_poly(MPoly.const(registry, c))

    @staticmethod
    def zero(registry: Registry) -> "RatFrac":
        return RatFrac.const(registry, 0)

    @staticmethod
    def one(registry: Registry) -> "RatFrac":
        return RatFrac.const(registry, 1)

    @staticmethod
    def var(registry: Registry, name: str) -> "RatFrac":
        return RatFrac.from_poly(MPoly.var(registry, name))

    @property
    def registry(self) -> Registry:
        return self.num.registry

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.is_const()

    def as_poly(self) -> MPoly:
        """The polynomial num/den; raises if den is not constant."""
        if not self.den.is_const():
            raise ValueError("not a polynomial: %s" % self)
        return self.num.scale(recip(self.den.const_value()))

    def is_const(self) -> bool:
        return self.num.is_const() and self.den.is_const()

    def const_value(self) -> Fraction:
        return self.num.const_value() / self.den.const_value()

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "RatFrac") -> "RatFrac":
        if self.den == other.den:
            return RatFrac(self.num + other.num, self.den)
        return RatFrac(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __neg__(self) -> "RatFrac":
        return RatFrac(-self.num, self.den, _normalized=True)

    def __sub__(self, other: "RatFrac") -> "RatFrac":
        return self + (-other)

    def __mul__(self, other) -> "RatFrac":
        if isinstance(other, (int, Fraction)):
            return RatFrac(self.num.scale(other), self.den)
        # cross-reduce, after which the product is already in lowest terms
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1 = self.num if g1.is_const() else self.num.exact_div(g1)
        d2 = other.den if g1.is_const() else other.den.exact_div(g1)
        n2 = other.num if g2.is_const() else other.num.exact_div(g2)
        d1 = self.den if g2.is_const() else self.den.exact_div(g2)
        num, den = n1 * n2, d1 * d2
        if num.is_zero():
            return RatFrac.zero(self.registry)
        _, lc = den.leading()
        if lc != 1:
            num = num.scale(recip(lc))
            den = den.scale(recip(lc))
        return RatFrac(num, den, _normalized=True)

    __rmul__ = __mul__

    def scale(self, c) -> "RatFrac":
        return RatFrac(self.num.scale(c), self.den, _normalized=True) if c else RatFrac.zero(self.registry)

    def inverse(self) -> "RatFrac":
        if self.is_zero():
            raise DomainError("inverse of zero")
        num, den = self.den, self.num
        _, lc = den.leading()
        if lc != 1:
            num = num.scale(recip(lc))
            den = den.scale(recip(lc))
        return RatFrac(num, den, _normalized=True)

    def __truediv__(self, other: "RatFrac") -> "RatFrac":
        return self * other.inverse()

    def __pow__(self, k: int) -> "RatFrac":
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return RatFrac.one(self.registry)
        # powers of a reduced fraction stay reduced; den stays monic
        return RatFrac(self.num**k, self.den**k, _normalized=True)

    def derivative(self, name: str) -> "RatFrac":
        return RatFrac(
            self.num.derivative(name) * self.den
            - self.num * self.den.derivative(name),
            self.den * self.den,
        )

    def subs(self, images: Mapping[str, MPoly]) -> "RatFrac":
        return RatFrac(self.num.subs(images), self.den.subs(images))

    def power_scale(self, k: int) -> "RatFrac":
        """Substitute every variable v by v^k (used for plethysm on p_k)."""
        f = lambda e: tuple(x * k for x in e)
        return RatFrac(self.num.map_exponents(f), self.den.map_exponents(f))

    def eval_frac(self, values: Mapping[str, Fraction]) -> Fraction:
        d = self.den.eval_frac(values)
        if not d:
            raise DomainError("denominator vanishes at evaluation point")
        return self.num.eval_frac(values) / d

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RatFrac)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self) -> str:
        from .parsing import render_frac

        return render_frac(self)


def _reduce(num: MPoly, den: MPoly) -> tuple[MPoly, MPoly]:
    if num.is_zero():
        return num, MPoly.const(num.registry, 1)
    g = poly_gcd(num, den)
    if not g.is_const():
        num = num.exact_div(g)
        den = den.exact_div(g)
    _, lc = den.leading()
    if lc != 1:
        num = num.scale(1 / lc)
        den = den.scale(1 / lc)
    return num, den


def normalize(f: RatFrac) -> RatFrac:
    """Re-normalize (idempotent; constructor already normalizes)."""
    return RatFrac(f.num, f.den)


# -- the q,t coefficient field ---------------------------------------------


def qt(expr) -> RatFrac:
    """QTFrac from an int/Fraction or a text expression like '(q^2+q)/(1-t)'."""
    if isinstance(expr, RatFrac):
        if expr.registry != QT:
            raise TypeError("not a q,t rational function")
        return expr
    if isinstance(expr, (int, Fraction)):
        return RatFrac.const(QT, expr)
    from .parsing import parse_frac

    return parse_frac(expr, QT)


QT_ZERO = RatFrac.zero(QT)
QT_ONE = RatFrac.one(QT)
QT_Q = RatFrac.var(QT, "q")
QT_T = RatFrac.var(QT, "t")


def x_registry(n: int, eps: bool = False) -> Registry:
    names = tuple("x%d" % i for i in range(1, n + 1))
    return names + ("eps",) if eps else names
