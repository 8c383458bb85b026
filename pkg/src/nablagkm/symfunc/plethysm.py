"""Plethystic substitution and two-alphabet symmetric functions.

An alphabet expression is a formal Z-linear-ish combination of X^a Y^b
(a, b in {0,1}) with coefficients in Q(q,t); this closed grammar covers
everything the calculus needs: X(1-q), -X, XY, XY/((1-q)(1-t)), Y/(1-q), ...
Plethysm evaluates the ring homomorphism p_k |-> A with every variable
raised to the k-th power, i.e. coefficients get q -> q^k, t -> t^k.
"""

from __future__ import annotations

from fractions import Fraction

from ..exactalg import QT, RatFrac, render_frac
from .bases import SymF, p_to_basis_coeffs, to_p_coeffs
from .partitions import Partition, rearrangements, sort_to_partition


class Alphabet:
    """Formal sum: {(a, b): coefficient in Q(q,t)} meaning c * X^a Y^b."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], RatFrac]):
        self.terms = {k: c for k, c in terms.items() if not c.is_zero()}

    @staticmethod
    def X() -> "Alphabet":
        return Alphabet({(1, 0): RatFrac.one(QT)})

    @staticmethod
    def Y() -> "Alphabet":
        return Alphabet({(0, 1): RatFrac.one(QT)})

    @staticmethod
    def XY() -> "Alphabet":
        return Alphabet({(1, 1): RatFrac.one(QT)})

    @staticmethod
    def scalar(c) -> "Alphabet":
        if isinstance(c, (int, Fraction)):
            c = RatFrac.const(QT, c)
        return Alphabet({(0, 0): c})

    def __add__(self, other: "Alphabet") -> "Alphabet":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            out[k] = c if s is None else s + c
        return Alphabet(out)

    def __neg__(self) -> "Alphabet":
        return Alphabet({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "Alphabet") -> "Alphabet":
        return self + (-other)

    def scale(self, c) -> "Alphabet":
        if isinstance(c, (int, Fraction)):
            c = RatFrac.const(QT, c)
        return Alphabet({k: c * v for k, v in self.terms.items()})

    __mul__ = scale
    __rmul__ = scale

    def __truediv__(self, c) -> "Alphabet":
        if isinstance(c, (int, Fraction)):
            c = RatFrac.const(QT, c)
        if isinstance(c, Alphabet):
            raise TypeError("division by an alphabet is unsupported")
        return self.scale(c.inverse())

    def pk(self, k: int) -> dict[tuple[int, int], RatFrac]:
        """Image of p_k: coefficients with q -> q^k, t -> t^k."""
        return {key: c.power_scale(k) for key, c in self.terms.items()}

    def __repr__(self) -> str:
        names = {(0, 0): "1", (1, 0): "X", (0, 1): "Y", (1, 1): "XY"}
        return " + ".join(
            "(%s)*%s" % (render_frac(c), names[k]) for k, c in sorted(self.terms.items())
        ) or "0"


class SymF2:
    """Two-alphabet symmetric function in a fixed Schur (x) Schur basis."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[tuple[Partition, Partition], RatFrac]):
        self.coeffs = {k: c for k, c in coeffs.items() if not c.is_zero()}

    @staticmethod
    def zero() -> "SymF2":
        return SymF2({})

    def __add__(self, other: "SymF2") -> "SymF2":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k)
            out[k] = c if s is None else s + c
        return SymF2(out)

    def __sub__(self, other: "SymF2") -> "SymF2":
        return self + other.scale(-1)

    def scale(self, c) -> "SymF2":
        if isinstance(c, (int, Fraction)):
            c = RatFrac.const(QT, c)
        return SymF2({k: c * v for k, v in self.coeffs.items()})

    __mul__ = scale
    __rmul__ = scale

    def is_zero(self) -> bool:
        return not self.coeffs

    def omega_x(self) -> "SymF2":
        from .partitions import conjugate

        return SymF2(
            {(conjugate(lam), mu): c for (lam, mu), c in self.coeffs.items()}
        )

    def x_coefficient(self, lam: Partition) -> SymF:
        """The SymF in Y paired with s_lam(X)."""
        out: dict[Partition, RatFrac] = {}
        for (l, mu), c in self.coeffs.items():
            if l == tuple(lam):
                out[mu] = c
        return SymF("s", out)

    def monomial_coeff(self, alpha, beta) -> RatFrac:
        """Coefficient of X^alpha Y^beta (weak-composition exponents)."""
        la = sort_to_partition(tuple(alpha))
        lb = sort_to_partition(tuple(beta))
        total = RatFrac.zero(QT)
        for (lam, mu), c in self.coeffs.items():
            a = _schur_m_coeff(lam, la)
            if not a:
                continue
            b = _schur_m_coeff(mu, lb)
            if not b:
                continue
            total = total + c.scale(a * b)
        return total

    def __eq__(self, other) -> bool:
        return isinstance(other, SymF2) and self.coeffs == other.coeffs

    def sorted_items(self):
        key = lambda kv: (
            sum(kv[0][0]),
            sum(kv[0][1]),
            tuple(-x for x in kv[0][0]),
            tuple(-x for x in kv[0][1]),
        )
        return sorted(self.coeffs.items(), key=key)

    def __repr__(self) -> str:
        frags = []
        for (lam, mu), c in self.sorted_items():
            frags.append(
                "(%s)*sX[%s]*sY[%s]"
                % (
                    render_frac(c),
                    ",".join(str(i) for i in lam),
                    ",".join(str(i) for i in mu),
                )
            )
        return " + ".join(frags) or "0"


def _schur_m_coeff(lam: Partition, mu: Partition) -> Fraction:
    if sum(lam) != sum(mu):
        return Fraction(0)
    table = p_to_basis_coeffs  # placate linters; real work below
    # s_lam -> m coordinates via p pivot (cached inside bases module)
    coeffs = _schur_to_m(lam)
    return coeffs.get(mu, Fraction(0))


from functools import lru_cache


@lru_cache(maxsize=None)
def _schur_to_m(lam: Partition) -> dict[Partition, Fraction]:
    out: dict[Partition, Fraction] = {}
    for nu, c in to_p_coeffs("s", lam).items():
        for mu, d in p_to_basis_coeffs("m", nu).items():
            out[mu] = out.get(mu, Fraction(0)) + c * d
    return {k: v for k, v in out.items() if v}


def plethysm(f: SymF, alph: Alphabet):
    """f[A].  Returns SymF when A involves only X (or scalars), else SymF2."""
    p = f.to_p()
    uses_y = any(b for (_, b) in alph.terms)
    # accumulate in p (x) p coordinates
    acc: dict[tuple[Partition, Partition], RatFrac] = {}
    for lam, coeff in p.coeffs.items():
        terms: list[list[tuple[tuple[int, int], RatFrac]]] = [
            list(alph.pk(k).items()) for k in lam
        ]
        stack = [((), (), coeff, 0)]
        while stack:
            xs, ys, c, depth = stack.pop()
            if depth == len(lam):
                key = (
                    tuple(sorted(xs, reverse=True)),
                    tuple(sorted(ys, reverse=True)),
                )
                s = acc.get(key)
                acc[key] = c if s is None else s + c
                continue
            k = lam[depth]
            for (a, b), w in terms[depth]:
                stack.append(
                    (
                        xs + ((k,) if a else ()),
                        ys + ((k,) if b else ()),
                        c * w,
                        depth + 1,
                    )
                )
    if not uses_y:
        out = {lam: c for (lam, _), c in acc.items()}
        return SymF("p", out).convert(f.basis if f.basis != "m" else "s")
    # convert p (x) p -> s (x) s
    out2: dict[tuple[Partition, Partition], RatFrac] = {}
    for (lx, ly), c in acc.items():
        for mx, a in p_to_basis_coeffs("s", lx).items():
            ca = c.scale(a)
            for my, b in p_to_basis_coeffs("s", ly).items():
                key = (mx, my)
                v = ca.scale(b)
                s = out2.get(key)
                out2[key] = v if s is None else s + v
    return SymF2(out2)
