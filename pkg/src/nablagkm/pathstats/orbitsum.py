"""The right-hand orbit sums: the raw three-label sum, the LLT-grouped sum,
and the finite signed-character sum over partial Dyck paths.

Orbit sums accumulate integer q-polynomials over the common denominator
[n]_q! (1-q)^n; the per-orbit factor is q^dinv times the q-multinomial
[n]_q! / aut_q(alpha), which is an integer polynomial.
"""

from __future__ import annotations

from itertools import combinations_with_replacement, product
from math import comb, factorial

from ..exactalg import QT, MPoly, Q_ONLY, RatFrac, TSeries
from ..symfunc import SymF
from .dyck import DyckPath, PartialDyckPath, attack_path
from .llt import Vanishing, chi_pil, llt_xi, vanishing
from .orbits import (
    aut_q,
    aut_q_poly,
    dinv_k_raw,
    poly_mul_int,
    q_factorial,
)

Cell = tuple[tuple[int, ...], tuple[int, ...]]


def _poly_div_int(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer coefficient lists."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        if c % den[-1]:
            raise ValueError("inexact polynomial division")
        q = c // den[-1]
        out[i] = q
        if q:
            for j, d in enumerate(den):
                num[i + j] -= q * d
    if any(num):
        raise ValueError("inexact polynomial division")
    return out


def q_multinomial(n: int, alpha) -> list[int]:
    """[n]_q! / prod [alpha_i]_q!, an integer q-polynomial."""
    return _poly_div_int(q_factorial(n), aut_q_poly(alpha))


def _sorted_blocks(m: tuple[int, ...]):
    """Run lengths of the weakly decreasing vector m."""
    blocks = []
    run = 1
    for i in range(1, len(m)):
        if m[i] == m[i - 1]:
            run += 1
        else:
            blocks.append(run)
            run = 1
    blocks.append(run)
    return blocks


def decreasing_vectors(n: int, total_max: int, part_max: int | None = None):
    """All weakly decreasing vectors of length n, entries >= 0, sum <= total_max."""
    out: list[tuple[int, ...]] = []

    def go(prefix, remaining, cap):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for v in range(min(cap, remaining), -1, -1):
            go(prefix + [v], remaining - v, v)

    go([], total_max, total_max if part_max is None else min(total_max, part_max))
    return out


def sorted_orbits_two_labels(n, t_max, nvars_x, nvars_y):
    """Sorted (m, a, b) with labels in {1..nvars}, |m| <= t_max."""
    pair_space = [
        (a, b) for a in range(1, nvars_x + 1) for b in range(1, nvars_y + 1)
    ]
    for m in decreasing_vectors(n, t_max):
        blocks = _sorted_blocks(m)
        choices = [
            list(combinations_with_replacement(pair_space, size)) for size in blocks
        ]
        for combo in product(*choices):
            pairs = [p for block in combo for p in block]
            a = tuple(p[0] for p in pairs)
            b = tuple(p[1] for p in pairs)
            yield m, a, b


def sorted_orbits_one_label(n, t_max, nvars_x, part_max=None):
    label_space = list(range(1, nvars_x + 1))
    for m in decreasing_vectors(n, t_max, part_max):
        blocks = _sorted_blocks(m)
        choices = [
            list(combinations_with_replacement(label_space, size)) for size in blocks
        ]
        for combo in product(*choices):
            a = tuple(x for block in combo for x in block)
            yield m, a


def _content(vec, nvars) -> tuple[int, ...]:
    out = [0] * nvars
    for x in vec:
        out[x - 1] += 1
    return tuple(out)


def _alpha_of(m, a, b=None) -> tuple[int, ...]:
    alpha = []
    run = 1
    for i in range(1, len(m)):
        same = m[i] == m[i - 1] and a[i] == a[i - 1] and (b is None or b[i] == b[i - 1])
        if same:
            run += 1
        else:
            alpha.append(run)
            run = 1
    alpha.append(run)
    return tuple(alpha)


class _Accumulator:
    """Map (cell, t-degree) -> integer q-polynomial as a coefficient dict."""

    def __init__(self, n: int, t_max: int):
        self.n = n
        self.t_max = t_max
        self.table: dict[Cell, list[dict[int, int]]] = {}
        self.den_poly = poly_mul_int(
            q_factorial(n), self._one_minus_q_pow(n)
        )

    @staticmethod
    def _one_minus_q_pow(n: int) -> list[int]:
        out = [1]
        for _ in range(n):
            out = poly_mul_int(out, [1, -1])
        return out

    def add(self, cell: Cell, d: int, qshift: int, poly: list[int]):
        rows = self.table.get(cell)
        if rows is None:
            rows = [dict() for _ in range(self.t_max + 1)]
            self.table[cell] = rows
        row = rows[d]
        for i, c in enumerate(poly):
            if c:
                row[qshift + i] = row.get(qshift + i, 0) + c

    def finish(self) -> dict[Cell, TSeries]:
        den = MPoly(Q_ONLY, {(i,): c for i, c in enumerate(self.den_poly) if c})
        out: dict[Cell, TSeries] = {}
        for cell, rows in self.table.items():
            coeffs = []
            for row in rows:
                num = MPoly(Q_ONLY, {(d,): c for d, c in row.items() if c})
                coeffs.append(RatFrac(num, den))
            series = TSeries(coeffs, self.t_max)
            if not series.is_zero():
                out[cell] = series
        return out


def orbit_sum_raw(n, k, t_trunc, nvars_x, nvars_y) -> dict[Cell, TSeries]:
    """Sum over sorted [m,a,b] of t^|m| q^dinv_k / ((1-q)^n aut_q) X_a Y_b."""
    acc = _Accumulator(n, t_trunc)
    multinom_cache: dict[tuple[int, ...], list[int]] = {}
    for m, a, b in sorted_orbits_two_labels(n, t_trunc, nvars_x, nvars_y):
        alpha = _alpha_of(m, a, b)
        mult = multinom_cache.get(alpha)
        if mult is None:
            mult = q_multinomial(n, alpha)
            multinom_cache[alpha] = mult
        dinv = dinv_k_raw(m, a, b, k)
        cell = (_content(a, nvars_x), _content(b, nvars_y))
        acc.add(cell, sum(m), dinv, mult)
    return acc.finish()


def orbit_sum_llt(n, k, t_trunc, nvars_x, nvars_y) -> dict[Cell, TSeries]:
    """The same sum grouped by (m, a) with the LLT factor in the Y alphabet."""
    acc = _Accumulator(n, t_trunc)
    multinom_cache: dict[tuple[int, ...], list[int]] = {}
    xi_cache: dict[DyckPath, dict[tuple[int, ...], list[int]]] = {}
    for m, a in sorted_orbits_one_label(n, t_trunc, nvars_x):
        alpha = _alpha_of(m, a)
        mult = multinom_cache.get(alpha)
        if mult is None:
            mult = q_multinomial(n, alpha)
            multinom_cache[alpha] = mult
        dinv = dinv_k_raw(m, a, None, k)
        path, _ = attack_path(m, a, k)
        xi = xi_cache.get(path)
        if xi is None:
            xi = _xi_monomial_table(path, nvars_y)
            xi_cache[path] = xi
        cx = _content(a, nvars_x)
        d = sum(m)
        for cy, poly in xi.items():
            acc.add((cx, cy), d, dinv, poly_mul_int(mult, poly))
    return acc.finish()


def _xi_monomial_table(path: DyckPath, nvars: int) -> dict[tuple[int, ...], list[int]]:
    """[Y^beta] xi_pi as integer q-polynomials, for all exponent vectors."""
    pairs = sorted(path.area_set())
    n = path.n
    table: dict[tuple[int, ...], list[int]] = {}
    top = len(pairs)
    for b in product(range(1, nvars + 1), repeat=n):
        inv = sum(1 for i, j in pairs if b[i - 1] > b[j - 1])
        expo = [0] * nvars
        for x in b:
            expo[x - 1] += 1
        row = table.setdefault(tuple(expo), [0] * (top + 1))
        row[inv] += 1
    return table


def rhs_orbit_sum(
    n, k, t_trunc, nvars_x=None, nvars_y=None, mode: str = "both"
) -> dict[Cell, TSeries]:
    """Thm-level orbit sum; mode 'both' evaluates the raw and the LLT-grouped
    forms and asserts they agree."""
    if t_trunc < 0:
        raise ValueError("negative truncation")
    nvars_x = n if nvars_x is None else nvars_x
    nvars_y = n if nvars_y is None else nvars_y
    if mode == "orbit":
        return orbit_sum_raw(n, k, t_trunc, nvars_x, nvars_y)
    if mode == "llt":
        return orbit_sum_llt(n, k, t_trunc, nvars_x, nvars_y)
    if mode != "both":
        raise ValueError("mode must be orbit | llt | both")
    raw = orbit_sum_raw(n, k, t_trunc, nvars_x, nvars_y)
    grouped = orbit_sum_llt(n, k, t_trunc, nvars_x, nvars_y)
    if raw != grouped:
        raise AssertionError("orbit and LLT-grouped sums disagree")
    return raw


def signed_char_sum(n: int, k: int = 1, nvars_y: int | None = None):
    """The finite sum over [m, a] of t^|m| q^dinv / aut_q X_a chi_{pi'};
    returns {X-exponent vector: SymF in Y}.

    Only classifier-nonzero terms contribute; enumeration runs past the
    descent-monomial bounds and asserts everything extra is classified zero.
    """
    nvars_y = n if nvars_y is None else nvars_y
    maj_bound = comb(n, 2)
    out: dict[tuple[int, ...], SymF] = {}
    chi_cache: dict[PartialDyckPath, SymF] = {}
    supported: dict[tuple[int, ...], int] = {}
    tvar = RatFrac.var(QT, "t")
    qvar = RatFrac.var(QT, "q")
    for m, a in sorted_orbits_one_label(n, maj_bound + n, n, part_max=n):
        path, pp = attack_path(m, a, k)
        kind = vanishing(pp)
        if kind is not Vanishing.MAJ_SUPPORTED:
            continue
        if sum(m) > maj_bound or (m and m[0] > n - 1):
            raise AssertionError(
                "nonzero term outside the descent-monomial range: %r" % (m,)
            )
        chi = chi_cache.get(pp)
        if chi is None:
            chi = chi_pil(pp, nvars_y)
            chi_cache[pp] = chi
        coeff = (
            tvar ** sum(m)
            * qvar ** dinv_k_raw(m, a, None, k)
            * aut_q(_alpha_of(m, a)).inverse()
        )
        cx = _content(a, n)
        supported[cx] = supported.get(cx, 0) + 1
        term = chi.scale(coeff)
        out[cx] = out.get(cx, SymF.zero("m")) + term
    if any(c > factorial(n) for c in supported.values()):
        raise AssertionError("an X-monomial block has more than n! terms")
    return {cx: f for cx, f in out.items() if not f.is_zero()}
