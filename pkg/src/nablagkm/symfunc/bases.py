"""Symmetric functions over Q(q,t) with the five classical bases.

All conversions pivot through power sums; the transition matrices per degree
are rational and cached.  Coefficients are QTFrac (rational functions in q,t).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations as iterperms

from ..exactalg import QT, RatFrac, render_frac
from .partitions import (
    Partition,
    check_partition,
    conjugate,
    multiplicity_factorial,
    partitions,
    zee,
)

BASES = ("m", "e", "h", "p", "s")

Coeffs = dict[Partition, Fraction]


def _merge(lam: Partition, mu: Partition) -> Partition:
    return tuple(sorted(lam + mu, reverse=True))


@lru_cache(maxsize=None)
def _newton_to_p(basis: str, k: int) -> Coeffs:
    """e_k or h_k in the p-basis, via Newton's identities."""
    if k == 0:
        return {(): Fraction(1)}
    acc: Coeffs = {}
    for i in range(1, k + 1):
        sign = Fraction((-1) ** (i - 1)) if basis == "e" else Fraction(1)
        for mu, c in _newton_to_p(basis, k - i).items():
            lam = _merge((i,), mu)
            acc[lam] = acc.get(lam, Fraction(0)) + sign * c
    return {lam: c / k for lam, c in acc.items() if c}


def _p_product(coeffs_list: list[Coeffs]) -> Coeffs:
    out: Coeffs = {(): Fraction(1)}
    for coeffs in coeffs_list:
        nxt: Coeffs = {}
        for lam, c in out.items():
            for mu, d in coeffs.items():
                key = _merge(lam, mu)
                nxt[key] = nxt.get(key, Fraction(0)) + c * d
        out = {k: v for k, v in nxt.items() if v}
    return out


@lru_cache(maxsize=None)
def _multiplicative_to_p(basis: str, lam: Partition) -> Coeffs:
    return _p_product([_newton_to_p(basis, part) for part in lam])


@lru_cache(maxsize=None)
def _h_coeffs_of_schur(lam: Partition) -> Coeffs:
    """Jacobi-Trudi: s_lam = det(h_{lam_i - i + j}) expanded in the h-basis."""
    ell = len(lam)
    if ell == 0:
        return {(): Fraction(1)}
    out: Coeffs = {}
    for sigma in iterperms(range(ell)):
        degs = []
        ok = True
        for i in range(ell):
            d = lam[i] - (i + 1) + (sigma[i] + 1)
            if d < 0:
                ok = False
                break
            if d > 0:
                degs.append(d)
        if not ok:
            continue
        sign = Fraction(_perm_sign(sigma))
        key = tuple(sorted(degs, reverse=True))
        out[key] = out.get(key, Fraction(0)) + sign
    return {k: v for k, v in out.items() if v}


def _perm_sign(sigma) -> int:
    sign = 1
    seen = [False] * len(sigma)
    for i in range(len(sigma)):
        if seen[i]:
            continue
        j = i
        clen = 0
        while not seen[j]:
            seen[j] = True
            j = sigma[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def _augmented_p_to_m(lam: Partition) -> Coeffs:
    """p_lam in the m-basis via augmented monomials."""
    # augmented coordinates: am_mu = (prod mult!) m_mu
    acc: dict[Partition, Fraction] = {(): Fraction(1)}
    for r in lam:
        nxt: dict[Partition, Fraction] = {}
        for mu, c in acc.items():
            parts = list(mu)
            for j in range(len(parts)):
                key = tuple(sorted(parts[:j] + [parts[j] + r] + parts[j + 1 :], reverse=True))
                nxt[key] = nxt.get(key, Fraction(0)) + c
            key = tuple(sorted(parts + [r], reverse=True))
            nxt[key] = nxt.get(key, Fraction(0)) + c
        acc = nxt
    # am_mu = (prod mult!) m_mu, so the m-coefficient gains that factor
    return {
        mu: c * multiplicity_factorial(mu) for mu, c in acc.items() if c
    }


@lru_cache(maxsize=None)
def _to_p_matrix(basis: str, degree: int) -> dict[Partition, Coeffs]:
    """basis_lam -> p-coordinates, for all lam of the given degree."""
    out: dict[Partition, Coeffs] = {}
    for lam in partitions(degree):
        if basis in ("e", "h"):
            out[lam] = _multiplicative_to_p(basis, lam)
        elif basis == "s":
            acc: Coeffs = {}
            for mu, c in _h_coeffs_of_schur(lam).items():
                for nu, d in _multiplicative_to_p("h", mu).items():
                    acc[nu] = acc.get(nu, Fraction(0)) + c * d
            out[lam] = {k: v for k, v in acc.items() if v}
        elif basis == "p":
            out[lam] = {lam: Fraction(1)}
        elif basis == "m":
            out[lam] = _invert_columns(_from_p_matrix_m(degree), lam)
        else:
            raise ValueError("unknown basis %r" % basis)
    return out


@lru_cache(maxsize=None)
def _from_p_matrix_m(degree: int) -> dict[Partition, Coeffs]:
    """p_lam -> m-coordinates for all lam of the given degree."""
    return {lam: _augmented_p_to_m(lam) for lam in partitions(degree)}


@lru_cache(maxsize=None)
def _matrix_inverse(degree: int, which: str) -> dict[Partition, Coeffs]:
    """Inverse of the (basis -> p) matrix, i.e. p_lam in the given basis."""
    parts = partitions(degree)
    idx = {lam: i for i, lam in enumerate(parts)}
    n = len(parts)
    # build the matrix of basis_lam in p-coordinates: column lam
    cols = _to_p_matrix(which, degree)
    a = [[Fraction(0)] * n for _ in range(n)]
    for lam, col in cols.items():
        j = idx[lam]
        for mu, c in col.items():
            a[idx[mu]][j] = c
    inv = _invert_matrix(a)
    # column lam of inv = p_lam in the basis `which`
    out: dict[Partition, Coeffs] = {}
    for j, lam in enumerate(parts):
        out[lam] = {
            parts[i]: inv[i][j] for i in range(n) if inv[i][j]
        }
    return out


def _invert_columns(mat: dict[Partition, Coeffs], lam: Partition) -> Coeffs:
    degree = sum(lam)
    return _matrix_inverse_m(degree)[lam]


@lru_cache(maxsize=None)
def _matrix_inverse_m(degree: int) -> dict[Partition, Coeffs]:
    """m_lam in p-coordinates (inverse of p -> m)."""
    parts = partitions(degree)
    idx = {lam: i for i, lam in enumerate(parts)}
    n = len(parts)
    a = [[Fraction(0)] * n for _ in range(n)]
    for lam, col in _from_p_matrix_m(degree).items():
        j = idx[lam]
        for mu, c in col.items():
            a[idx[mu]][j] = c
    # here column lam = p_lam in m coords; invert to get m_lam in p coords
    inv = _invert_matrix(a)
    out: dict[Partition, Coeffs] = {}
    for j, lam in enumerate(parts):
        out[lam] = {parts[i]: inv[i][j] for i in range(n) if inv[i][j]}
    return out


def _invert_matrix(a: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(a)
    m = [row[:] + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col])
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def to_p_coeffs(basis: str, lam: Partition) -> Coeffs:
    if basis == "p":
        return {lam: Fraction(1)}
    if basis == "m":
        return _matrix_inverse_m(sum(lam))[lam]
    return _to_p_matrix(basis, sum(lam))[lam]


def p_to_basis_coeffs(basis: str, lam: Partition) -> Coeffs:
    """p_lam expressed in the target basis."""
    if basis == "p":
        return {lam: Fraction(1)}
    if basis == "m":
        return _from_p_matrix_m(sum(lam))[lam]
    return _matrix_inverse(sum(lam), basis)[lam]


class SymF:
    """Symmetric function: tagged basis + {partition: QTFrac coefficient}."""

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis: str, coeffs: dict[Partition, RatFrac]):
        if basis not in BASES:
            raise ValueError("unknown basis %r" % basis)
        self.basis = basis
        self.coeffs = {
            check_partition(lam): c for lam, c in coeffs.items() if not c.is_zero()
        }

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(basis: str = "s") -> "SymF":
        return SymF(basis, {})

    @staticmethod
    def one(basis: str = "s") -> "SymF":
        return SymF(basis, {(): RatFrac.one(QT)})

    @staticmethod
    def gen(basis: str, lam) -> "SymF":
        return SymF(basis, {tuple(lam): RatFrac.one(QT)})

    # -- structure ---------------------------------------------------------

    def degrees(self) -> list[int]:
        return sorted({sum(lam) for lam in self.coeffs})

    def is_zero(self) -> bool:
        return not self.coeffs

    def homogeneous_part(self, d: int) -> "SymF":
        return SymF(
            self.basis, {lam: c for lam, c in self.coeffs.items() if sum(lam) == d}
        )

    def coeff(self, lam) -> RatFrac:
        return self.coeffs.get(tuple(lam), RatFrac.zero(QT))

    def __add__(self, other: "SymF") -> "SymF":
        if other.basis != self.basis:
            other = other.convert(self.basis)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            s = out.get(lam)
            out[lam] = c if s is None else s + c
        return SymF(self.basis, out)

    def __neg__(self) -> "SymF":
        return SymF(self.basis, {lam: -c for lam, c in self.coeffs.items()})

    def __sub__(self, other: "SymF") -> "SymF":
        return self + (-other)

    def scale(self, c) -> "SymF":
        if isinstance(c, (int, Fraction)):
            c = RatFrac.const(QT, c)
        return SymF(self.basis, {lam: c * v for lam, v in self.coeffs.items()})

    def __mul__(self, other) -> "SymF":
        if isinstance(other, (int, Fraction, RatFrac)):
            return self.scale(other)
        a = self.to_p()
        b = other.to_p()
        out: dict[Partition, RatFrac] = {}
        for lam, c in a.coeffs.items():
            for mu, d in b.coeffs.items():
                key = _merge(lam, mu)
                s = out.get(key)
                cd = c * d
                out[key] = cd if s is None else s + cd
        return SymF("p", out).convert(self.basis)

    __rmul__ = __mul__

    def to_p(self) -> "SymF":
        if self.basis == "p":
            return self
        out: dict[Partition, RatFrac] = {}
        for lam, c in self.coeffs.items():
            for mu, r in to_p_coeffs(self.basis, lam).items():
                s = out.get(mu)
                v = c * r
                out[mu] = v if s is None else s + v
        return SymF("p", out)

    def convert(self, basis: str) -> "SymF":
        if basis == self.basis:
            return self
        p = self.to_p()
        if basis == "p":
            return p
        out: dict[Partition, RatFrac] = {}
        for lam, c in p.coeffs.items():
            for mu, r in p_to_basis_coeffs(basis, lam).items():
                s = out.get(mu)
                v = c * r
                out[mu] = v if s is None else s + v
        return SymF(basis, out)

    def omega(self) -> "SymF":
        p = self.to_p()
        out = {
            lam: c.scale((-1) ** (sum(lam) - len(lam)))
            for lam, c in p.coeffs.items()
        }
        return SymF("p", out).convert(self.basis)

    def hall_inner(self, other: "SymF") -> RatFrac:
        a = self.to_p()
        b = other.to_p()
        total = RatFrac.zero(QT)
        for lam, c in a.coeffs.items():
            d = b.coeffs.get(lam)
            if d is not None:
                total = total + c * d * zee(lam)
        return total

    def subs_coeffs(self, fn) -> "SymF":
        return SymF(self.basis, {lam: fn(c) for lam, c in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymF):
            return NotImplemented
        if self.basis == other.basis:
            return self.coeffs == other.coeffs
        return self.to_p().coeffs == other.to_p().coeffs

    def __hash__(self):
        p = self.to_p()
        return hash(frozenset(p.coeffs.items()))

    def sorted_items(self):
        return sorted(
            self.coeffs.items(), key=lambda kv: (sum(kv[0]), tuple(-x for x in kv[0]))
        )

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        frags = []
        for lam, c in self.sorted_items():
            mono = "%s[%s]" % (self.basis, ",".join(str(x) for x in lam))
            cs = render_frac(c)
            if cs == "1":
                frags.append(mono)
            elif cs == "-1":
                frags.append("-" + mono)
            elif ("+" in cs[1:]) or ("-" in cs[1:]) or "/" in cs:
                frags.append("(%s)*%s" % (cs, mono))
            else:
                frags.append("%s*%s" % (cs, mono))
        return " + ".join(frags).replace("+ -", "- ")


def omega(f: SymF) -> SymF:
    return f.omega()


def hall_inner(f: SymF, g: SymF) -> RatFrac:
    return f.hall_inner(g)


def schur_conjugation_check(lam: Partition) -> bool:
    """omega s_lam == s_{lam'} (used as a self-test)."""
    return SymF.gen("s", lam).omega() == SymF.gen("s", conjugate(lam))
