"""Truncated power series in t with coefficients in Q(q)."""

from __future__ import annotations

from fractions import Fraction

from .mpoly import DomainError, MPoly
from .ratfrac import Q_ONLY, QT, RatFrac


class PoleError(DomainError):
    """Denominator vanishes at t = 0."""


class TSeries:
    """coeffs[d] is the exact coefficient of t^d, for d = 0..trunc."""

    __slots__ = ("coeffs", "trunc")

    def __init__(self, coeffs: list[RatFrac], trunc: int):
        if len(coeffs) != trunc + 1:
            raise ValueError("need trunc+1 coefficients")
        self.coeffs = list(coeffs)
        self.trunc = trunc

    @staticmethod
    def zero(trunc: int) -> "TSeries":
        return TSeries([RatFrac.zero(Q_ONLY)] * (trunc + 1), trunc)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TSeries)
            and self.trunc == other.trunc
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.trunc, tuple(self.coeffs)))

    def __add__(self, other: "TSeries") -> "TSeries":
        n = min(self.trunc, other.trunc)
        return TSeries(
            [self.coeffs[d] + other.coeffs[d] for d in range(n + 1)], n
        )

    def __sub__(self, other: "TSeries") -> "TSeries":
        n = min(self.trunc, other.trunc)
        return TSeries(
            [self.coeffs[d] - other.coeffs[d] for d in range(n + 1)], n
        )

    def __mul__(self, other) -> "TSeries":
        if isinstance(other, (int, Fraction, RatFrac)):
            c = other if isinstance(other, RatFrac) else RatFrac.const(Q_ONLY, other)
            return TSeries([x * c for x in self.coeffs], self.trunc)
        n = min(self.trunc, other.trunc)
        out = []
        for d in range(n + 1):
            acc = RatFrac.zero(Q_ONLY)
            for j in range(d + 1):
                if not (self.coeffs[j].is_zero() or other.coeffs[d - j].is_zero()):
                    acc = acc + self.coeffs[j] * other.coeffs[d - j]
            out.append(acc)
        return TSeries(out, n)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __repr__(self) -> str:
        return "[" + ", ".join(repr(c) for c in self.coeffs) + "]"


def _split_t(p: MPoly) -> dict[int, MPoly]:
    """Split a q,t-polynomial into {t-degree: polynomial in q}."""
    it = p.registry.index("t")
    iq = p.registry.index("q")
    out: dict[int, dict] = {}
    for e, c in p.terms.items():
        out.setdefault(e[it], {})[(e[iq],)] = c
    return {d: MPoly(Q_ONLY, t) for d, t in out.items()}


def tseries_expand(f: RatFrac, trunc: int) -> TSeries:
    """Power-series expansion of a q,t rational function at t = 0."""
    if f.registry != QT:
        raise TypeError("tseries_expand expects a q,t rational function")
    if trunc < 0:
        raise ValueError("negative truncation order")
    num = _split_t(f.num)
    den = _split_t(f.den)
    d0 = den.get(0)
    if d0 is None or d0.is_zero():
        raise PoleError("denominator vanishes at t=0")
    d0 = RatFrac.from_poly(d0)
    coeffs: list[RatFrac] = []
    for d in range(trunc + 1):
        acc = RatFrac.from_poly(num.get(d, MPoly.zero(Q_ONLY)))
        for j in range(1, d + 1):
            dj = den.get(j)
            if dj is not None and not coeffs[d - j].is_zero():
                acc = acc - RatFrac.from_poly(dj) * coeffs[d - j]
        coeffs.append(acc / d0)
    return TSeries(coeffs, trunc)
