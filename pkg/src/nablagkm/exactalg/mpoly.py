"""Sparse multivariate polynomials over arbitrary-precision rationals.

A polynomial carries an explicit variable registry (an ordered tuple of
names).  Mixing registries is a checked error; there are no global variable
tables.  The monomial order is graded reverse-lexicographic with respect to
the registry order, fixed once and used everywhere (canonical forms, leading
terms, Groebner bases).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

Registry = tuple[str, ...]
Exponent = tuple[int, ...]


class RegistryMismatch(TypeError):
    """Raised when two values over different variable registries are mixed."""


class DomainError(ZeroDivisionError):
    """Raised on division by zero in an exact domain."""


def grevlex_key(e: Exponent):
    """Sort key; larger key = larger monomial in grevlex."""
    return (sum(e),) + tuple(-e[i] for i in range(len(e) - 1, -1, -1))


def _norm_coeff(c):
    """Keep integral coefficients as plain ints (much faster arithmetic)."""
    if type(c) is int:
        return c
    if type(c) is not Fraction:
        c = Fraction(c)
    if c.denominator == 1:
        return c.numerator
    return c


def recip(c):
    """Exact reciprocal of an int or Fraction."""
    return Fraction(1, c) if type(c) is int else 1 / c


class MPoly:
    """Immutable sparse polynomial: {exponent: nonzero int or Fraction}."""

    __slots__ = ("registry", "terms", "_hash")

    def __init__(self, registry: Registry, terms: Mapping[Exponent, Fraction]):
        self.registry = registry
        self.terms = {e: _norm_coeff(c) for e, c in terms.items() if c}
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(registry: Registry) -> "MPoly":
        return MPoly(registry, {})

    @staticmethod
    def const(registry: Registry, c) -> "MPoly":
        if not c:
            return MPoly.zero(registry)
        return MPoly(registry, {(0,) * len(registry): c})

    @staticmethod
    def var(registry: Registry, name: str) -> "MPoly":
        i = registry.index(name)
        e = tuple(1 if j == i else 0 for j in range(len(registry)))
        return MPoly(registry, {e: 1})

    @staticmethod
    def monomial(registry: Registry, expo: Exponent, c=1) -> "MPoly":
        if not c:
            return MPoly.zero(registry)
        return MPoly(registry, {tuple(expo): c})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return all(not any(e) for e in self.terms)

    def const_value(self) -> Fraction:
        if not self.terms:
            return 0
        if not self.is_const():
            raise ValueError("not a constant: %s" % self)
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        if not self.terms:
            return -1
        i = self.registry.index(name)
        return max(e[i] for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def leading(self) -> tuple[Exponent, Fraction]:
        """Leading (exponent, coefficient) under grevlex."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=grevlex_key)
        return e, self.terms[e]

    def coeff(self, expo: Exponent) -> Fraction:
        return self.terms.get(tuple(expo), 0)

    def _check(self, other: "MPoly"):
        if self.registry != other.registry:
            raise RegistryMismatch(
                "registry mismatch: %r vs %r" % (self.registry, other.registry)
            )

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "MPoly") -> "MPoly":
        self._check(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e)
            if s is None:
                t[e] = c
            else:
                s = s + c
                if s:
                    t[e] = s
                else:
                    del t[e]
        return MPoly(self.registry, t)

    def __neg__(self) -> "MPoly":
        return MPoly(self.registry, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MPoly") -> "MPoly":
        return self + (-other)

    def __mul__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        if len(self.terms) > len(other.terms):
            self, other = other, self
        t: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = t.get(e)
                t[e] = c1 * c2 if s is None else s + c1 * c2
        return MPoly(self.registry, {e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def scale(self, c) -> "MPoly":
        if not c:
            return MPoly.zero(self.registry)
        return MPoly(self.registry, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.const(self.registry, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def divmod(self, divisor: "MPoly") -> tuple["MPoly", "MPoly"]:
        """Multivariate division by a single divisor under grevlex."""
        self._check(divisor)
        if divisor.is_zero():
            raise DomainError("division by zero polynomial")
        de, dc = divisor.leading()
        quo: dict[Exponent, Fraction] = {}
        rem: dict[Exponent, Fraction] = {}
        work = dict(self.terms)
        while work:
            e = max(work, key=grevlex_key)
            c = work.pop(e)
            diff = tuple(a - b for a, b in zip(e, de))
            if all(d >= 0 for d in diff):
                q = _norm_coeff(Fraction(c) / dc if type(c) is not int or type(dc) is not int else Fraction(c, dc))
                quo[diff] = quo.get(diff, 0) + q
                for e2, c2 in divisor.terms.items():
                    if e2 == de:
                        continue
                    e3 = tuple(a + b for a, b in zip(diff, e2))
                    s = work.get(e3, 0) - q * c2
                    if s:
                        work[e3] = s
                    elif e3 in work:
                        del work[e3]
            else:
                rem[e] = c
        return MPoly(self.registry, quo), MPoly(self.registry, rem)

    def exact_div(self, divisor: "MPoly") -> "MPoly":
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise ValueError("inexact division: %s by %s" % (self, divisor))
        return q

    def divides(self, other: "MPoly") -> bool:
        _, r = other.divmod(self)
        return r.is_zero()

    def derivative(self, name: str) -> "MPoly":
        i = self.registry.index(name)
        t: dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = e[:i] + (e[i] - 1,) + e[i + 1 :]
                t[e2] = t.get(e2, 0) + c * e[i]
        return MPoly(self.registry, t)

    def subs(self, images: Mapping[str, "MPoly"]) -> "MPoly":
        """Substitute variables by polynomials over the same registry."""
        imgs = []
        for i, name in enumerate(self.registry):
            if name in images:
                imgs.append(images[name])
            else:
                imgs.append(MPoly.var(self.registry, name))
        out = MPoly.zero(self.registry)
        powcache: dict[tuple[int, int], MPoly] = {}

        def vpow(i: int, k: int) -> MPoly:
            key = (i, k)
            got = powcache.get(key)
            if got is None:
                got = imgs[i] ** k
                powcache[key] = got
            return got

        for e, c in self.terms.items():
            term = MPoly.const(self.registry, c)
            for i, k in enumerate(e):
                if k:
                    term = term * vpow(i, k)
            out = out + term
        return out

    def eval_frac(self, values: Mapping[str, Fraction]) -> Fraction:
        """Evaluate at rational points (all variables must be assigned)."""
        total = Fraction(0)
        vals = [values[name] for name in self.registry]
        for e, c in self.terms.items():
            v = c
            for x, k in zip(vals, e):
                if k:
                    v *= x**k
            total += v
        return total

    def map_exponents(self, f) -> "MPoly":
        t: dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            e2 = f(e)
            t[e2] = t.get(e2, 0) + c
        return MPoly(self.registry, t)

    # -- gcd machinery -----------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational gcd of the coefficients (0 for zero)."""
        if not self.terms:
            return Fraction(0)
        from math import gcd as igcd

        num = 0
        den = 1
        for c in self.terms.values():
            num = igcd(num, c.numerator)
            den = den * c.denominator // igcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> "MPoly":
        c = self.content()
        if not c:
            return self
        return self.scale(recip(c))

    def monic(self) -> "MPoly":
        """Divide by the grevlex leading coefficient."""
        if self.is_zero():
            return self
        _, lc = self.leading()
        return self.scale(recip(lc))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MPoly)
            and self.registry == other.registry
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                (self.registry, frozenset(self.terms.items()))
            )
        return self._hash

    def __repr__(self) -> str:
        from .parsing import render_poly

        return render_poly(self)

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)


def _to_univariate(p: MPoly, i: int) -> dict[int, MPoly]:
    """View p as a polynomial in variable i with coefficients dropping it."""
    sub_registry = p.registry[:i] + p.registry[i + 1 :]
    out: dict[int, dict[Exponent, Fraction]] = {}
    for e, c in p.terms.items():
        k = e[i]
        e2 = e[:i] + e[i + 1 :]
        out.setdefault(k, {})[e2] = c
    return {k: MPoly(sub_registry, t) for k, t in out.items()}


def _from_univariate(coeffs: dict[int, MPoly], registry: Registry, i: int) -> MPoly:
    t: dict[Exponent, Fraction] = {}
    for k, p in coeffs.items():
        for e, c in p.terms.items():
            t[e[:i] + (k,) + e[i:]] = c
    return MPoly(registry, t)


def _uni_degree(coeffs: dict[int, MPoly]) -> int:
    return max(coeffs) if coeffs else -1


def _uni_prem(f: dict[int, MPoly], g: dict[int, MPoly]) -> dict[int, MPoly]:
    """Exact pseudo-remainder lc(g)^(deg f - deg g + 1) * f mod g."""
    df, dg = _uni_degree(f), _uni_degree(g)
    lg = g[dg]
    n = df - dg + 1
    r = dict(f)
    while r and _uni_degree(r) >= dg:
        dr = _uni_degree(r)
        lr = r[dr]
        r = {k: c * lg for k, c in r.items()}
        n -= 1
        shift = dr - dg
        for k, c in g.items():
            k2 = k + shift
            s = r.get(k2, None)
            v = lr * c
            if s is None:
                if not v.is_zero():
                    r[k2] = -v
            else:
                s = s - v
                if s.is_zero():
                    del r[k2]
                else:
                    r[k2] = s
        r = {k: c for k, c in r.items() if not c.is_zero()}
    if n > 0 and r:
        scale = lg**n
        r = {k: c * scale for k, c in r.items()}
    return r


def _poly_gcd_list(ps: Iterable[MPoly], registry: Registry) -> MPoly:
    g = MPoly.zero(registry)
    for p in sorted(ps, key=lambda p: len(p.terms)):
        g = poly_gcd(g, p)
        if g.is_const() and not g.is_zero():
            return MPoly.const(registry, 1)
    return g


def poly_gcd(a: MPoly, b: MPoly) -> MPoly:
    """Monic gcd: content-and-primitive-part recursion on the last variable,
    subresultant PRS for the primitive parts."""
    if a.registry != b.registry:
        raise RegistryMismatch("gcd registry mismatch")
    registry = a.registry
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.is_const() or b.is_const():
        return MPoly.const(registry, 1)
    if a == b:
        return a.monic()
    # cheap wins: one argument divides the other
    if len(b.terms) <= len(a.terms) and b.divides(a):
        return b.monic()
    if len(a.terms) <= len(b.terms) and a.divides(b):
        return a.monic()
    nvars = len(registry)
    # recurse on the last variable that actually appears in both
    i = nvars - 1
    while i >= 0 and (a.degree_in(registry[i]) == 0 or b.degree_in(registry[i]) == 0):
        i -= 1
    if i < 0:
        # disjoint variable supports
        return MPoly.const(registry, 1)
    fa = _to_univariate(a, i)
    fb = _to_univariate(b, i)
    sub_reg = registry[:i] + registry[i + 1 :]
    ca = _poly_gcd_list(fa.values(), sub_reg)
    cb = _poly_gcd_list(fb.values(), sub_reg)
    if not ca.is_const():
        fa = {k: p.exact_div(ca) for k, p in fa.items()}
    if not cb.is_const():
        fb = {k: p.exact_div(cb) for k, p in fb.items()}
    if _uni_degree(fa) < _uni_degree(fb):
        fa, fb = fb, fa
    # subresultant polynomial remainder sequence
    one = MPoly.const(sub_reg, 1)
    g_ = one
    h_ = one
    while True:
        if not fb:
            prim = fa
            break
        delta = _uni_degree(fa) - _uni_degree(fb)
        r = _uni_prem(fa, fb)
        if not r:
            prim = fb
            break
        if _uni_degree(r) == 0:
            # gcd of primitive parts is trivial
            prim = None
            break
        divisor = g_ * h_**delta
        fa = fb
        fb = {k: p.exact_div(divisor) for k, p in r.items()}
        g_ = fa[_uni_degree(fa)]
        if delta == 0:
            # h unchanged
            pass
        elif delta == 1:
            h_ = g_
        else:
            h_ = (g_**delta).exact_div(h_ ** (delta - 1))
    cont = poly_gcd(ca, cb)
    if prim is None:
        # primitive parts are coprime; the gcd is the content alone
        prim = {0: cont}
    else:
        cp = _poly_gcd_list(prim.values(), sub_reg)
        if not cp.is_const():
            prim = {k: p.exact_div(cp) for k, p in prim.items()}
        if not cont.is_const():
            prim = {k: p * cont for k, p in prim.items()}
    return _from_univariate(prim, registry, i).monic()


def poly_lcm(a: MPoly, b: MPoly) -> MPoly:
    if a.is_zero() or b.is_zero():
        return MPoly.zero(a.registry)
    return (a * b).exact_div(poly_gcd(a, b)).monic()
