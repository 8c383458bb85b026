"""Quasisymmetric monomial expansions of symmetric functions."""

from __future__ import annotations

from ..exactalg import QT, RatFrac, render_frac
from .bases import SymF
from .partitions import Composition, rearrangements


class QSymExpansion:
    """Coordinates on quasisymmetric monomials M_alpha, alpha strict."""

    __slots__ = ("coeffs", "nvars")

    def __init__(self, coeffs: dict[Composition, RatFrac], nvars: int):
        self.coeffs = {a: c for a, c in coeffs.items() if not c.is_zero()}
        self.nvars = nvars

    def coeff(self, alpha) -> RatFrac:
        return self.coeffs.get(tuple(alpha), RatFrac.zero(QT))

    def symmetrize(self) -> SymF:
        """Recover the m-basis coordinates (partition representatives)."""
        out = {}
        for alpha, c in self.coeffs.items():
            lam = tuple(sorted(alpha, reverse=True))
            if alpha == lam:
                out[lam] = c
        return SymF("m", out)

    def __eq__(self, other):
        return (
            isinstance(other, QSymExpansion)
            and self.nvars == other.nvars
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        frags = [
            "(%s)*M[%s]" % (render_frac(c), ",".join(str(i) for i in a))
            for a, c in sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]))
        ]
        return " + ".join(frags) or "0"


def to_qsym(f: SymF, nvars: int) -> QSymExpansion:
    """Expand into M_alpha coordinates valid in the given number of variables."""
    m = f.convert("m")
    degs = m.degrees()
    if degs and nvars < max(degs):
        # fewer variables than the degree would silently drop monomials
        raise ValueError("nvars=%d too small for degree %d" % (nvars, max(degs)))
    out = {}
    for lam, c in m.coeffs.items():
        for alpha in rearrangements(lam):
            if len(alpha) <= nvars:
                out[alpha] = c
    return QSymExpansion(out, nvars)
