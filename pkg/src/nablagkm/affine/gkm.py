"""Moment-graph edge sets for the affine flag variety, the unramified affine
Springer fibers, and regular semisimple Hessenberg varieties.

Edges point from a vertex to a Bruhat-smaller one.  Weights are root forms
lambda_a - lambda_b over the big torus registry (x_1..x_n, eps), with the
representative pair normalized so that a < b and a lies in 1..n.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from ..exactalg import MPoly, x_registry
from ..pathstats.dyck import DyckPath
from .cosets import right_coset_min
from .perms import (
    AffinePerm,
    bruhat_interval_is_lower_set,
    bruhat_leq,
    from_finite,
    inv,
    inversions,
    transposition,
)


def lambda_weight(n: int, i: int, eps: bool = True) -> MPoly:
    """lambda_i = x_{ibar} + ((i - ibar)/n) eps."""
    reg = x_registry(n, eps=eps)
    r = (i - 1) % n + 1
    out = MPoly.var(reg, "x%d" % r)
    shift = (i - r) // n
    if eps and shift:
        out = out + MPoly.var(reg, "eps").scale(shift)
    return out


def root_weight(n: int, a: int, b: int, eps: bool = True) -> MPoly:
    """alpha_{a,b} = lambda_a - lambda_b, normalized so a < b and a in 1..n."""
    if a > b:
        a, b = b, a
    r = (a - 1) % n + 1
    shift = a - r
    a, b = a - shift, b - shift
    return lambda_weight(n, a, eps) - lambda_weight(n, b, eps)


@dataclass(frozen=True)
class GKMEdge:
    src: AffinePerm
    dst: AffinePerm
    weight: MPoly


@dataclass(frozen=True)
class GKMEdgeSet:
    kind: str
    n: int
    alpha: tuple[int, ...]
    vertices: tuple[AffinePerm, ...]
    edges: tuple[GKMEdge, ...]

    def outgoing(self, v: AffinePerm) -> tuple[GKMEdge, ...]:
        return tuple(e for e in self.edges if e.src == v)

    def edge_pairs(self) -> set[tuple[AffinePerm, AffinePerm]]:
        return {(e.src, e.dst) for e in self.edges}

    def render(self) -> str:
        lines = []
        for e in sorted(self.edges, key=lambda e: (e.src.window, e.dst.window)):
            lines.append("%r %r %s" % (e.src, e.dst, e.weight))
        return "\n".join(lines)


def _sorted_vertices(vs) -> tuple[AffinePerm, ...]:
    return tuple(sorted(vs, key=lambda w: (inv(w), w.window)))


def _springer_positions(v: AffinePerm, a: int, b: int) -> tuple[int, int]:
    vi = v.inverse()
    return vi(a), vi(b)


def gkm_edges(
    kind: str,
    n: int,
    vertices=None,
    alpha=None,
    k: int | None = None,
    path: DyckPath | None = None,
    eps: bool = True,
) -> GKMEdgeSet:
    """Edge sets: kind in {'flag', 'springer', 'hessenberg'}.

    flag/springer take a vertex list of coset-minimal representatives (a
    lower set); hessenberg uses all of S_n/S_alpha.
    """
    alpha = tuple(alpha) if alpha is not None else (1,) * n
    if kind == "hessenberg":
        if path is None:
            raise ValueError("hessenberg needs a Dyck path")
        verts = {
            right_coset_min(from_finite(p), alpha)
            for p in permutations(range(1, n + 1))
        }
        verts = _sorted_vertices(verts)
        pairs = sorted(path.area_set())
        edges = []
        for w in verts:
            for (i, j) in pairs:
                u = w * transposition(n, i, j)
                if u != right_coset_min(u, alpha):
                    continue
                if not (inv(u) < inv(w) and bruhat_leq(u, w)):
                    continue
                a, b = w(i), w(j)
                edges.append(GKMEdge(w, u, root_weight(n, a, b, eps)))
        return GKMEdgeSet("hessenberg", n, alpha, verts, tuple(edges))

    if kind not in ("flag", "springer"):
        raise ValueError("unknown kind %r" % kind)
    if kind == "springer" and k is None:
        raise ValueError("springer needs k")
    if vertices is None:
        raise ValueError("flag/springer need a vertex list")
    verts = _sorted_vertices(vertices)
    vset = set(verts)
    parabolic = alpha != (1,) * n
    if not parabolic and not bruhat_interval_is_lower_set(vset):
        raise ValueError("vertices are not a lower set")
    edges = []
    for v in verts:
        if parabolic and v != right_coset_min(v, alpha):
            raise ValueError("parabolic vertices must be minimal representatives")
        for (a, b) in inversions(v):
            u = transposition(n, a, b) * v
            if parabolic:
                if u != right_coset_min(u, alpha):
                    continue
            if kind == "springer":
                i, j = _springer_positions(v, a, b)
                if abs(i - j) >= k * n:
                    continue
            if u not in vset:
                if parabolic:
                    raise ValueError("parabolic vertex set is not edge-closed")
                raise AssertionError("lower set misses an edge target")
            edges.append(GKMEdge(v, u, root_weight(n, a, b, eps)))
    return GKMEdgeSet(kind, n, alpha, verts, tuple(edges))


def leading_term(edge_set: GKMEdgeSet, v: AffinePerm) -> MPoly:
    """Product of the outgoing edge weights at v."""
    out = None
    for e in edge_set.edges:
        if e.src == v:
            out = e.weight if out is None else out * e.weight
    if out is None:
        reg = x_registry(edge_set.n, eps=True)
        return MPoly.const(reg, 1)
    return out
