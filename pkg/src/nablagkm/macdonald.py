"""Modified Macdonald polynomials, the nabla operator, and the two-alphabet
Macdonald kernel.

The modified basis is computed by solving the triangularity axioms as an
exact linear system over Q(q,t): f[X(q-1)] supported on {s_mu : mu <= lam'},
f[X(t-1)] supported on {s_mu : mu <= lam} (dominance order), and
<f, s_(n)> = 1.  The nabla operator scales the basis element labeled lam by
q^{n'(lam)} t^{n(lam)}.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .exactalg import QT, MPoly, RatFrac, qt
from .symfunc import (
    Alphabet,
    SymF,
    SymF2,
    conjugate,
    dominates,
    hooks,
    n_stat,
    nprime_stat,
    partitions,
    plethysm,
    zee,
)

Partition = tuple[int, ...]


def nabla_eigenvalue(lam: Partition, k: int = 1) -> RatFrac:
    """(q^{n'(lam)} t^{n(lam)})^k, with negative k via the inverse."""
    e = RatFrac.var(QT, "q") ** nprime_stat(lam) * RatFrac.var(QT, "t") ** n_stat(
        lam
    )
    return e**k


def kernel_norm(lam: Partition) -> RatFrac:
    """Normalization w_lam of the modified Macdonald kernel.

    Cell product of (q^arm - t^(leg+1)) (t^leg - q^(arm+1)).  The tests
    re-derive this from the plethysm oracle at n <= 4 rather than trusting it.
    """
    q = RatFrac.var(QT, "q")
    t = RatFrac.var(QT, "t")
    one = RatFrac.one(QT)
    out = one
    for arm, leg in hooks(lam):
        out = out * (q**arm - t ** (leg + 1)) * (t**leg - q ** (arm + 1))
    return out


class MacdonaldCache:
    """Per-degree tables of the modified basis and its eigenvalues.

    Fill happens under a lock; reads of completed entries are lock-free.
    """

    def __init__(self):
        self._h: dict[Partition, SymF] = {}
        self._inv: dict[int, list] = {}
        self._numeric: dict = {}
        self._lock = threading.Lock()

    def modified(self, lam) -> SymF:
        lam = tuple(lam)
        got = self._h.get(lam)
        if got is None:
            with self._lock:
                got = self._h.get(lam)
                if got is None:
                    got = _solve_axioms(lam)
                    self._h[lam] = got
        return got

    def eigenvalue(self, lam, k: int = 1) -> RatFrac:
        return nabla_eigenvalue(tuple(lam), k)

    def schur_matrix(self, degree: int) -> dict[Partition, dict[Partition, RatFrac]]:
        return {lam: dict(self.modified(lam).coeffs) for lam in partitions(degree)}

    def dual_pairs(
        self, degree: int
    ) -> list[tuple[Partition, dict[Partition, RatFrac], RatFrac]]:
        """(lam, dual p-coordinates, norm): coordinates in the modified basis
        come from the Hall pairing against omega H(lam)[X(1-q)(1-t)].

        The norms are computed and pairwise orthogonality is asserted, never
        assumed.  Everything stays in p-coordinates, which are polynomial.
        """
        got = self._inv.get(degree)
        if got is not None:
            return got
        q = RatFrac.var(QT, "q")
        t = RatFrac.var(QT, "t")
        one = RatFrac.one(QT)
        factor: dict[int, RatFrac] = {
            k: (one - q**k) * (one - t**k) for k in range(1, degree + 1)
        }
        basis_p = []
        duals = []
        for lam in partitions(degree):
            hp = dict(self.modified(lam).to_p().coeffs)
            basis_p.append(hp)
            dual = {}
            for mu, c in hp.items():
                w = c.scale((-1) ** (degree - len(mu)))
                for k in mu:
                    w = w * factor[k]
                dual[mu] = w
            duals.append(dual)

        def pair(a, b):
            acc = RatFrac.zero(QT)
            for mu, c in a.items():
                d = b.get(mu)
                if d is not None:
                    acc = acc + c * d * zee(mu)
            return acc

        out = []
        for i, lam in enumerate(partitions(degree)):
            for j in range(len(duals)):
                p = pair(basis_p[i], duals[j])
                if i == j:
                    norm = p
                    if norm.is_zero():
                        raise ArithmeticError("degenerate Macdonald pairing")
                elif not p.is_zero():
                    raise ArithmeticError(
                        "Macdonald dual pairing failed orthogonality"
                    )
            out.append((lam, duals[i], norm))
        with self._lock:
            self._inv[degree] = out
        return out


_CACHE = MacdonaldCache()
_PLETHYSM_TABLE: dict[tuple[str, int], dict] = {}
_TABLE_LOCK = threading.Lock()


def _twist_table(var: str, degree: int):
    """[s_nu] s_mu[X(var - 1)] for all mu, nu of the degree."""
    key = (var, degree)
    got = _PLETHYSM_TABLE.get(key)
    if got is not None:
        return got
    with _TABLE_LOCK:
        got = _PLETHYSM_TABLE.get(key)
        if got is not None:
            return got
        alph = Alphabet.X().scale(qt(var) - qt(1))
        table = {}
        for mu in partitions(degree):
            img = plethysm(SymF.gen("s", mu), alph).convert("s")
            table[mu] = dict(img.coeffs)
        _PLETHYSM_TABLE[key] = table
        return table


def _axiom_rows(lam: Partition):
    """The homogeneous vanishing conditions plus the normalization row."""
    n = sum(lam)
    parts = partitions(n)
    zero = RatFrac.zero(QT)
    one = RatFrac.one(QT)
    tq = _twist_table("q", n)
    tt = _twist_table("t", n)
    lamc = conjugate(lam)
    rows: list[list[RatFrac]] = []
    rhs: list[RatFrac] = []
    for nu in parts:
        # f[X(q-1)] supported on {s_nu : nu <= lam'}; f[X(t-1)] on {s_nu : nu <= lam}
        if not dominates(lamc, nu):
            rows.append([tq[mu].get(nu, zero) for mu in parts])
            rhs.append(zero)
        if not dominates(lam, nu):
            rows.append([tt[mu].get(nu, zero) for mu in parts])
            rhs.append(zero)
    normal = [one if mu == (n,) else zero for mu in parts]
    rows.append(normal)
    rhs.append(one)
    return parts, rows, rhs


def _solve_axioms(lam: Partition) -> SymF:
    parts, rows, rhs = _axiom_rows(lam)
    sol = _interpolate_solution(lam, parts, rows, rhs)
    if sol is None:
        sol = _solve_unique(rows, rhs)
    return SymF("s", {mu: sol[i] for i, mu in enumerate(parts)})


def _interpolate_solution(lam, parts, rows, rhs):
    """Solve by evaluation at a rational grid and 2-d interpolation.

    The coefficients are polynomials in q, t with degrees bounded by
    n'(lam), n(lam); the candidate is verified exactly against every row,
    so a wrong bound can only cause a fallback, never a wrong answer.
    """
    dq = nprime_stat(lam)
    dt = n_stat(lam)
    ncols = len(parts)
    # distinct primes for q and t dodge the resonance loci q^a = t^b;
    # residual singular points are skipped adaptively
    qpool = iter(_PRIMES[0::2])
    tpool_src = _PRIMES[1::2]

    def eval_solve(q0, t0):
        pt = {"q": q0, "t": t0}
        m = [
            [x.eval_frac(pt) for x in row] + [b.eval_frac(pt)]
            for row, b in zip(rows, rhs)
        ]
        return _numeric_solve(m, ncols)

    qv = MPoly.var(QT, "q")
    tv = MPoly.var(QT, "t")
    per_q: list[tuple[Fraction, list[MPoly]]] = []
    while len(per_q) < dq + 1:
        q0 = Fraction(next(qpool, 0))
        if not q0:
            return None
        tvals: list[tuple[Fraction, list[Fraction]]] = []
        for t0 in tpool_src:
            sol = eval_solve(q0, Fraction(t0))
            if sol is not None:
                tvals.append((Fraction(t0), sol))
                if len(tvals) == dt + 1:
                    break
        if len(tvals) < dt + 1:
            continue
        polys = [
            _lagrange([(t0, sol[i]) for t0, sol in tvals], tv)
            for i in range(ncols)
        ]
        per_q.append((q0, polys))
    coeffs: list[RatFrac] = []
    for i in range(ncols):
        poly = _lagrange_poly([(q0, ps[i]) for q0, ps in per_q], qv)
        coeffs.append(RatFrac.from_poly(poly))
    # exact verification of every axiom row
    for row, b in zip(rows, rhs):
        acc = RatFrac.zero(QT)
        for x, c in zip(row, coeffs):
            if not (x.is_zero() or c.is_zero()):
                acc = acc + x * c
        if acc != b:
            return None
    return coeffs


_PRIMES = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
    151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229,
]


def _numeric_solve(m: list[list[Fraction]], ncols: int):
    """Dense rational Gauss-Jordan; None if rank-deficient or inconsistent."""
    nrows = len(m)
    r = 0
    pivots = []
    for c in range(ncols):
        piv = next((rr for rr in range(r, nrows) if m[rr][c]), None)
        if piv is None:
            return None
        m[r], m[piv] = m[piv], m[r]
        inv = Fraction(1, 1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for rr in range(nrows):
            if rr != r and m[rr][c]:
                f = m[rr][c]
                m[rr] = [x - f * y for x, y in zip(m[rr], m[r])]
        pivots.append(c)
        r += 1
    for rr in range(r, nrows):
        if m[rr][ncols]:
            return None
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        sol[c] = m[i][ncols]
    return sol


def _lagrange(points: list[tuple[Fraction, Fraction]], var: MPoly) -> MPoly:
    """Univariate Lagrange interpolation with MPoly output."""
    reg = var.registry
    out = MPoly.zero(reg)
    for i, (xi, yi) in enumerate(points):
        if not yi:
            continue
        term = MPoly.const(reg, yi)
        for j, (xj, _) in enumerate(points):
            if j != i:
                term = term * (var - MPoly.const(reg, xj))
                term = term.scale(Fraction(1, 1) / (xi - xj))
        out = out + term
    return out


def _lagrange_poly(points: list[tuple[Fraction, MPoly]], var: MPoly) -> MPoly:
    reg = var.registry
    out = MPoly.zero(reg)
    for i, (xi, yi) in enumerate(points):
        if yi.is_zero():
            continue
        term = yi
        for j, (xj, _) in enumerate(points):
            if j != i:
                term = term * (var - MPoly.const(reg, xj))
                term = term.scale(Fraction(1, 1) / (xi - xj))
        out = out + term
    return out


def _solve_unique(rows: list[list[RatFrac]], rhs: list[RatFrac]) -> list[RatFrac]:
    sols = solve_exact(rows, [[b] for b in rhs])
    return [row[0] for row in sols]


def solve_exact(
    rows: list[list[RatFrac]], rhs: list[list[RatFrac]]
) -> list[list[RatFrac]]:
    """Solve A x = b over Q(q,t) for several right-hand sides at once.

    Gauss-Jordan with sparsest-pivot selection.  Requires full column rank
    and consistency; raises otherwise.
    """
    ncols = len(rows[0])
    nrhs = len(rhs[0])
    width = ncols + nrhs
    m = [list(row) + list(extra) for row, extra in zip(rows, rhs)]
    nrows = len(m)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        best = None
        for rr in range(r, nrows):
            if not m[rr][c].is_zero():
                sz = sum(1 for x in m[rr] if not x.is_zero())
                if best is None or sz < best:
                    piv, best = rr, sz
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [x if x.is_zero() else x * inv for x in m[r]]
        for rr in range(nrows):
            if rr != r and not m[rr][c].is_zero():
                f = m[rr][c]
                m[rr] = [
                    x - f * y if not y.is_zero() else x
                    for x, y in zip(m[rr], m[r])
                ]
        pivots.append(c)
        r += 1
    if len(pivots) != ncols:
        raise ArithmeticError("linear system is underdetermined")
    for rr in range(r, nrows):
        for j in range(ncols, width):
            if not m[rr][j].is_zero():
                raise ArithmeticError("linear system is inconsistent")
    out = [[RatFrac.zero(QT)] * nrhs for _ in range(ncols)]
    for i, c in enumerate(pivots):
        out[c] = m[i][ncols:]
    return out


def modified_macdonald(lam, cache: MacdonaldCache | None = None) -> SymF:
    """The modified Macdonald polynomial labeled by lam, in the Schur basis."""
    return (cache or _CACHE).modified(lam)


def nabla(f: SymF, k: int = 1, cache: MacdonaldCache | None = None) -> SymF:
    """Apply nabla^k (k may be negative) to a symmetric function."""
    cache = cache or _CACHE
    s = f.convert("s")
    out: dict[Partition, RatFrac] = {}
    for d in s.degrees():
        comp = s.homogeneous_part(d)
        img = _nabla_interpolated(comp, d, k, cache)
        if img is None:
            img = _nabla_exact(comp, d, k, cache)
        for mu, c in img.items():
            prev = out.get(mu)
            out[mu] = c if prev is None else prev + c
    return SymF("s", out).convert(f.basis)


def _nabla_exact(comp: SymF, d: int, k: int, cache) -> dict[Partition, RatFrac]:
    coords = _to_modified_coords(comp, d, cache)
    out: dict[Partition, RatFrac] = {}
    for lam, c in coords.items():
        if c.is_zero():
            continue
        scaled = c * nabla_eigenvalue(lam, k)
        for mu, v in cache.modified(lam).coeffs.items():
            w = scaled * v
            prev = out.get(mu)
            out[mu] = w if prev is None else prev + w
    return out


def _nabla_interpolated(comp: SymF, d: int, k: int, cache):
    """nabla^k on a homogeneous piece by evaluation/interpolation.

    Works when the Schur coefficients of the input are polynomial and k >= 0
    (then the image is polynomial whenever nabla positivity-type bounds hold;
    if they fail the exact verification catches it and we fall back).
    """
    if k < 0:
        return None
    parts = partitions(d)
    fs = {mu: comp.coeffs.get(mu) for mu in parts}
    coeffs = {mu: c for mu, c in fs.items() if c is not None}
    if not all(c.is_poly() for c in coeffs.values()):
        return None
    polys = {mu: c.as_poly() for mu, c in coeffs.items()}
    dq = max((p.degree_in("q") for p in polys.values()), default=0)
    dt = max((p.degree_in("t") for p in polys.values()), default=0)
    top = max(nprime_stat(lam) for lam in parts)
    bq = dq + k * top + 1
    bt = dt + k * top + 1
    qv = MPoly.var(QT, "q")
    tv = MPoly.var(QT, "t")
    per_q: list[tuple[Fraction, list[MPoly]]] = []
    qpool = iter(_PRIMES[0::2])
    while len(per_q) < bq:
        q0 = Fraction(next(qpool, 0))
        if not q0:
            return None
        tvals = []
        for t0 in _PRIMES[1::2]:
            sol = _numeric_nabla(polys, parts, d, k, q0, Fraction(t0), cache)
            if sol is not None:
                tvals.append((Fraction(t0), sol))
                if len(tvals) == bt:
                    break
        if len(tvals) < bt:
            continue
        per_q.append(
            (
                q0,
                [
                    _lagrange([(t0, sol[i]) for t0, sol in tvals], tv)
                    for i in range(len(parts))
                ],
            )
        )
    out: dict[Partition, RatFrac] = {}
    for i, mu in enumerate(parts):
        poly = _lagrange_poly([(q0, ps[i]) for q0, ps in per_q], qv)
        if not poly.is_zero():
            out[mu] = RatFrac.from_poly(poly)
    # exact verification: pairings against the dual basis must match the
    # eigenvalue-scaled pairings of the input (no divisions involved)
    gp = SymF("s", out).to_p().coeffs
    fp = comp.to_p().coeffs
    for lam, dual, _ in cache.dual_pairs(d):
        lhs = RatFrac.zero(QT)
        for mu, c in gp.items():
            dd = dual.get(mu)
            if dd is not None:
                lhs = lhs + c * dd * zee(mu)
        rhs = RatFrac.zero(QT)
        for mu, c in fp.items():
            dd = dual.get(mu)
            if dd is not None:
                rhs = rhs + c * dd * zee(mu)
        if lhs != rhs * nabla_eigenvalue(lam, k):
            return None
    return out


def _numeric_nabla(polys, parts, d, k, q0, t0, cache):
    """Evaluate nabla^k of the piece at a rational point (q0, t0)."""
    basis = _numeric_basis(d, q0, t0, cache)
    if basis is None:
        return None
    pt = {"q": q0, "t": t0}
    vec = [polys.get(mu) for mu in parts]
    rhs = [[p.eval_frac(pt) if p is not None else Fraction(0)] for p in vec]
    m = [row[:] + rhs[i] for i, row in enumerate(basis)]
    coords = _numeric_solve(m, len(parts))
    if coords is None:
        return None
    qn = [nprime_stat(lam) for lam in parts]
    tn = [n_stat(lam) for lam in parts]
    scaled = [
        c * q0 ** (k * qn[j]) * t0 ** (k * tn[j]) for j, c in enumerate(coords)
    ]
    basis_again = _numeric_basis(d, q0, t0, cache)
    out = []
    for i in range(len(parts)):
        out.append(sum(basis_again[i][j] * scaled[j] for j in range(len(parts))))
    return out


def _numeric_basis(d, q0, t0, cache):
    """Numeric matrix K[i][j] = [s_i] H(lam_j) at (q0, t0), cached."""
    key = (d, q0, t0)
    got = cache._numeric.get(key)
    if got is not None:
        return got if got != "bad" else None
    parts = partitions(d)
    cols = []
    for lam in parts:
        col = _numeric_axiom_solve(lam, q0, t0)
        if col is None:
            cache._numeric[key] = "bad"
            return None
        cols.append(col)
    mat = [[cols[j][i] for j in range(len(parts))] for i in range(len(parts))]
    cache._numeric[key] = mat
    return mat


def _numeric_axiom_solve(lam, q0, t0):
    parts, rows, rhs = _axiom_rows(lam)
    pt = {"q": q0, "t": t0}
    m = [
        [x.eval_frac(pt) for x in row] + [b.eval_frac(pt)]
        for row, b in zip(rows, rhs)
    ]
    return _numeric_solve(m, len(parts))


def _to_modified_coords(
    f: SymF, degree: int, cache: MacdonaldCache
) -> dict[Partition, RatFrac]:
    fp = dict(f.to_p().coeffs)
    out: dict[Partition, RatFrac] = {}
    zero = RatFrac.zero(QT)
    for lam, dual, norm in cache.dual_pairs(degree):
        acc = zero
        for mu, c in fp.items():
            d = dual.get(mu)
            if d is not None:
                acc = acc + c * d * zee(mu)
        out[lam] = acc / norm
    return out


def cauchy_kernel(n: int, k: int, cache: MacdonaldCache | None = None) -> SymF2:
    """nabla_X^k e_n[XY/((1-q)(1-t))] as a Schur (x) Schur two-alphabet function."""
    if n < 1:
        raise ValueError("n must be positive")
    cache = cache or _CACHE
    out: dict[tuple[Partition, Partition], RatFrac] = {}
    for lam in partitions(n):
        h = cache.modified(lam)
        w = nabla_eigenvalue(lam, k) * kernel_norm(lam).inverse()
        for mu, a in h.coeffs.items():
            wa = w * a
            for nu, b in h.coeffs.items():
                key = (mu, nu)
                v = wa * b
                prev = out.get(key)
                out[key] = v if prev is None else prev + v
    return SymF2(out)


def twisted_kernel(n: int, k: int, cache: MacdonaldCache | None = None) -> SymF2:
    """q^{-k binom(n,2)} omega_X nabla_X^k e_n[XY/((1-q)(1-t))]."""
    shift = RatFrac.var(QT, "q") ** (-k * (n * (n - 1) // 2))
    return cauchy_kernel(n, k, cache).omega_x().scale(shift)
