"""Fractions whose denominators are multisets of linear root forms.

Every denominator produced by the moment-graph calculus is a product of
forms x_i - x_j + c*eps.  Keeping the factorization explicit makes
cancellation a sequence of exact divisions instead of a general gcd.
"""

from __future__ import annotations

from fractions import Fraction

from .mpoly import DomainError, MPoly, Registry, recip
from .ratfrac import RatFrac


def canonical_factor(f: MPoly) -> tuple[MPoly, Fraction]:
    """Scale f so its grevlex leading coefficient is 1; return (monic, scale)."""
    _, lc = f.leading()
    if lc == 1:
        return f, Fraction(1)
    return f.scale(recip(lc)), lc


class RootFactored:
    """num / prod(factors); factors monic linear forms with multiplicity."""

    __slots__ = ("num", "factors", "_hash")

    def __init__(self, num: MPoly, factors: dict[MPoly, int] | None = None,
                 _reduced: bool = False):
        self.num = num
        self.factors = dict(factors) if factors else {}
        self._hash = None
        if num.is_zero():
            self.factors = {}
        elif not _reduced:
            self._reduce()

    def _reduce(self):
        for f in list(self.factors):
            m = self.factors[f]
            while m > 0:
                q, r = self.num.divmod(f)
                if not r.is_zero():
                    break
                self.num = q
                m -= 1
            if m:
                self.factors[f] = m
            else:
                del self.factors[f]

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_poly(p: MPoly) -> "RootFactored":
        return RootFactored(p, {}, _reduced=True)

    @staticmethod
    def zero(registry: Registry) -> "RootFactored":
        return RootFactored(MPoly.zero(registry), {}, _reduced=True)

    @staticmethod
    def one(registry: Registry) -> "RootFactored":
        return RootFactored(MPoly.const(registry, 1), {}, _reduced=True)

    @property
    def registry(self) -> Registry:
        return self.num.registry

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return not self.factors

    def as_poly(self) -> MPoly:
        if self.factors:
            raise ValueError("denominator is nontrivial: %s" % self)
        return self.num

    def den_poly(self) -> MPoly:
        d = MPoly.const(self.registry, 1)
        for f, m in self.factors.items():
            d = d * f**m
        return d

    def to_ratfrac(self) -> RatFrac:
        return RatFrac(self.num, self.den_poly())

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "RootFactored") -> "RootFactored":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        # common denominator = factor-wise max multiplicity
        keys = set(self.factors) | set(other.factors)
        n1, n2 = self.num, other.num
        den: dict[MPoly, int] = {}
        for f in keys:
            m1 = self.factors.get(f, 0)
            m2 = other.factors.get(f, 0)
            m = max(m1, m2)
            den[f] = m
            if m > m1:
                n1 = n1 * f ** (m - m1)
            if m > m2:
                n2 = n2 * f ** (m - m2)
        return RootFactored(n1 + n2, den)

    def __neg__(self) -> "RootFactored":
        return RootFactored(-self.num, self.factors, _reduced=True)

    def __sub__(self, other: "RootFactored") -> "RootFactored":
        return self + (-other)

    def __mul__(self, other) -> "RootFactored":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, MPoly):
            other = RootFactored.from_poly(other)
        if self.is_zero() or other.is_zero():
            return RootFactored.zero(self.registry)
        den = dict(self.factors)
        for f, m in other.factors.items():
            den[f] = den.get(f, 0) + m
        return RootFactored(self.num * other.num, den)

    __rmul__ = __mul__

    def scale(self, c) -> "RootFactored":
        if not c:
            return RootFactored.zero(self.registry)
        return RootFactored(self.num.scale(c), self.factors, _reduced=True)

    def mul_poly(self, p: MPoly) -> "RootFactored":
        return self * RootFactored.from_poly(p)

    def div_root(self, form: MPoly, mult: int = 1) -> "RootFactored":
        """Divide by a linear root form (adds a denominator factor)."""
        if self.is_zero():
            return self
        monic, scale = canonical_factor(form)
        den = dict(self.factors)
        den[monic] = den.get(monic, 0) + mult
        from .mpoly import recip
        return RootFactored(self.num.scale(recip(scale) ** mult), den)

    def subs(self, images) -> "RootFactored":
        """Substitute variables; factor images must stay products of forms."""
        num = self.num.subs(images)
        out = RootFactored(num, {}, _reduced=True)
        for f, m in self.factors.items():
            out = out.div_root(f.subs(images), m)
        return out

    def eps_zero(self) -> "RootFactored":
        """Specialize eps -> 0 (registry keeps eps; factors must stay nonzero)."""
        z = {"eps": MPoly.zero(self.registry)}
        num = self.num.subs(z)
        out = RootFactored(num, {}, _reduced=True)
        for f, m in self.factors.items():
            f0 = f.subs(z)
            if f0.is_zero():
                raise DomainError("root form vanishes at eps=0: %s" % f)
            out = out.div_root(f0, m)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, RootFactored):
            return NotImplemented
        if self.registry != other.registry:
            return False
        if self.num == other.num and self.factors == other.factors:
            return True
        # reduced forms are unique up to exact equality of the fraction
        return (self - other).is_zero()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, frozenset(self.factors.items())))
        return self._hash

    def __repr__(self) -> str:
        from .parsing import render_poly

        if not self.factors:
            return render_poly(self.num)
        fac = "*".join(
            "(%s)%s" % (render_poly(f), "" if m == 1 else "^%d" % m)
            for f, m in sorted(
                self.factors.items(), key=lambda t: sorted(t[0].terms)
            )
        )
        return "(%s)/(%s)" % (render_poly(self.num), fac)


def root_reduce(f: RootFactored) -> RootFactored:
    """Cancel every denominator factor dividing the numerator."""
    return RootFactored(f.num, f.factors)
