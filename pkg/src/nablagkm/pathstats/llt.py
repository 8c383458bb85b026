"""LLT polynomials of Dyck paths, chromatic symmetric functions, and the
signed character of open Hessenberg loci."""

from __future__ import annotations

import enum
from itertools import product

from ..exactalg import QT, MPoly, RatFrac, qt
from ..symfunc import Alphabet, SymF, plethysm
from .dyck import DyckPath, PartialDyckPath
from .orbits import epsilon


class Vanishing(enum.Enum):
    ZERO_BY_L0 = "zero-by-l0"
    ZERO_BY_TOUCHPOINT = "zero-by-touchpoint"
    MAJ_SUPPORTED = "maj-supported"


def vanishing(pp: PartialDyckPath) -> Vanishing:
    """Classify whether the signed character is forced to vanish."""
    if pp.l == 0:
        return Vanishing.ZERO_BY_L0
    if pp.path.touch_points():
        return Vanishing.ZERO_BY_TOUCHPOINT
    return Vanishing.MAJ_SUPPORTED


def _qpoly(coeffs: dict[int, int]) -> RatFrac:
    return RatFrac.from_poly(
        MPoly(QT, {(d, 0): c for d, c in coeffs.items() if c})
    )


def _collect_symmetric(table: dict[tuple[int, ...], dict[int, int]], nvars: int,
                       what: str) -> SymF:
    """Turn {exponent vector: q-coefficients} into an m-basis SymF.

    Asserts full S_nvars symmetry of the accumulated monomial table.
    """
    out = {}
    for expo, coeffs in table.items():
        lam = tuple(sorted((x for x in expo if x), reverse=True))
        rep = tuple(lam) + (0,) * (nvars - len(lam))
        if expo == rep:
            out[lam] = coeffs
    for expo, coeffs in table.items():
        lam = tuple(sorted((x for x in expo if x), reverse=True))
        ref = out.get(lam, {})
        clean = {d: c for d, c in coeffs.items() if c}
        refc = {d: c for d, c in ref.items() if c}
        if clean != refc:
            raise AssertionError(
                "%s accumulation is not symmetric at %r" % (what, expo)
            )
    return SymF("m", {lam: _qpoly(c) for lam, c in out.items()})


def llt_xi(path: DyckPath, nvars: int | None = None) -> SymF:
    """xi_pi[Y; q] = sum over labels b of q^{inv_pi(b)} Y_b (m-basis)."""
    n = path.n
    nvars = n if nvars is None else nvars
    if nvars < n:
        raise ValueError("nvars must be at least the path size")
    pairs = sorted(path.area_set())
    table: dict[tuple[int, ...], dict[int, int]] = {}
    for b in product(range(1, nvars + 1), repeat=n):
        inv = sum(1 for i, j in pairs if b[i - 1] > b[j - 1])
        expo = [0] * nvars
        for x in b:
            expo[x - 1] += 1
        cell = table.setdefault(tuple(expo), {})
        cell[inv] = cell.get(inv, 0) + 1
    return _collect_symmetric(table, nvars, "llt")


def chromatic(path: DyckPath, nvars: int | None = None) -> SymF:
    """Stanley's chromatic symmetric function of the incomparability graph."""
    n = path.n
    nvars = n if nvars is None else nvars
    if nvars < n:
        raise ValueError("nvars must be at least the path size")
    pairs = sorted(path.area_set())
    table: dict[tuple[int, ...], dict[int, int]] = {}
    for b in product(range(1, nvars + 1), repeat=n):
        if any(b[i - 1] == b[j - 1] for i, j in pairs):
            continue
        inv = sum(1 for i, j in pairs if b[i - 1] > b[j - 1])
        expo = [0] * nvars
        for x in b:
            expo[x - 1] += 1
        cell = table.setdefault(tuple(expo), {})
        cell[inv] = cell.get(inv, 0) + 1
    return _collect_symmetric(table, nvars, "chromatic")


def chi_pil(pp: PartialDyckPath, nvars: int | None = None) -> SymF:
    """The signed sum over labels b and sign vectors t (t_i = 0 for i > n-l):
    (-1)^{|t|} q^{inv_pi(b . t)} Y_b, with (b . t)_i = (-1)^{t_i}(b_i + t_i N)
    and N = max(b) taken per summand."""
    path = pp.path
    n = path.n
    nvars = n if nvars is None else nvars
    if nvars < n:
        raise ValueError("nvars must be at least the path size")
    pairs = sorted(path.area_set())
    free = n - pp.l  # positions allowed to carry t_i = 1
    table: dict[tuple[int, ...], dict[int, int]] = {}
    for b in product(range(1, nvars + 1), repeat=n):
        bigN = max(b)
        expo = [0] * nvars
        for x in b:
            expo[x - 1] += 1
        cell = table.setdefault(tuple(expo), {})
        for t in product((0, 1), repeat=free):
            sign = -1 if sum(t) % 2 else 1
            bt = [
                -(b[i] + bigN) if i < free and t[i] else b[i] for i in range(n)
            ]
            inv = sum(epsilon(bt[i - 1], bt[j - 1]) for i, j in pairs)
            cell[inv] = cell.get(inv, 0) + sign
    return _collect_symmetric(table, nvars, "chi")


def chi_prime(pp: PartialDyckPath, nvars: int | None = None) -> SymF:
    """(1-q)^{-n} chi[Y(1-q); q], in the Schur basis."""
    n = pp.n
    chi = chi_pil(pp, nvars)
    alph = Alphabet.X().scale(qt("1-q"))
    return plethysm(chi, alph).scale(qt("1/(1-q)") ** n).convert("s")
