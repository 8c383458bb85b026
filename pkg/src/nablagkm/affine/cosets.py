"""Double cosets S_beta \\ W / S_alpha, window bijections with label orbits."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from ..pathstats.orbits import standardize, standardize_desc
from .perms import AffinePerm, from_finite, inv


def young_subgroup(n: int, alpha) -> list[tuple[int, ...]]:
    """S_alpha as finite permutations (one-line windows)."""
    if sum(alpha) != n:
        raise ValueError("composition does not sum to n")
    blocks = []
    start = 1
    for part in alpha:
        blocks.append(list(range(start, start + part)))
        start += part
    perms_per_block = [list(permutations(b)) for b in blocks]
    out = []

    def go(i, acc):
        if i == len(blocks):
            win = [0] * n
            for block, img in zip(blocks, acc):
                for pos, val in zip(block, img):
                    win[pos - 1] = val
            out.append(tuple(win))
            return
        for img in perms_per_block[i]:
            go(i + 1, acc + [img])

    go(0, [])
    return out


@dataclass(frozen=True)
class DoubleCoset:
    """S_beta w S_alpha with its minimal and maximal representatives."""

    beta: tuple[int, ...]
    alpha: tuple[int, ...]
    rep_min: AffinePerm
    rep_max: AffinePerm


def right_coset_min(w: AffinePerm, alpha) -> AffinePerm:
    """Minimal representative of w S_alpha: sort the window inside blocks."""
    win = list(w.window)
    out = []
    start = 0
    for part in alpha:
        out.extend(sorted(win[start : start + part]))
        start += part
    return AffinePerm(tuple(out))


def right_coset_max(w: AffinePerm, alpha) -> AffinePerm:
    win = list(w.window)
    out = []
    start = 0
    for part in alpha:
        out.extend(sorted(win[start : start + part], reverse=True))
        start += part
    return AffinePerm(tuple(out))


def double_coset_elements(w: AffinePerm, alpha, beta) -> list[AffinePerm]:
    n = w.n
    left = [from_finite(p) for p in young_subgroup(n, beta)]
    right = [from_finite(p) for p in young_subgroup(n, alpha)]
    seen = set()
    out = []
    for s in left:
        sw = s * w
        for t in right:
            u = sw * t
            if u not in seen:
                seen.add(u)
                out.append(u)
    return out


def coset_reps(w: AffinePerm, alpha, beta=None) -> DoubleCoset:
    """Minimal and maximal representatives of S_beta w S_alpha.

    beta defaults to (1,...,1), i.e. a plain right coset.
    """
    n = w.n
    beta = tuple(beta) if beta is not None else (1,) * n
    alpha = tuple(alpha)
    elements = double_coset_elements(w, alpha, beta)
    by_inv = sorted(elements, key=inv)
    lo, hi = by_inv[0], by_inv[-1]
    if len(by_inv) > 1:
        if inv(by_inv[1]) == inv(lo):
            raise AssertionError("minimal representative is not unique")
        if inv(by_inv[-2]) == inv(hi):
            raise AssertionError("maximal representative is not unique")
    return DoubleCoset(beta, alpha, lo, hi)


def stabilizer_composition_of_coset(w: AffinePerm, alpha) -> tuple[int, ...]:
    """alpha(S_n w S_alpha): blocks of the stabilizer of S_n acting on w S_alpha."""
    n = w.n
    base = right_coset_min(w, alpha)

    def fixes(i):
        s = list(range(1, n + 1))
        s[i - 1], s[i] = i + 1, i
        img = right_coset_min(from_finite(tuple(s)) * base, alpha)
        return img == base

    blocks = []
    run = 1
    for i in range(1, n):
        if fixes(i):
            run += 1
        else:
            blocks.append(run)
            run = 1
    blocks.append(run)
    return tuple(blocks)


def _sn_windows(n: int):
    return [tuple(p) for p in permutations(range(1, n + 1))]


def paff0(m, a, b=None) -> AffinePerm:
    """The window shuff_>(revl(b)) o t_m o shuff_<(a)^{-1} of a sorted orbit.

    Slot i of the orbit sits at window position shuff_<(a)(i) with value
    residue shuff_>(revl(b))(n+1-i) and quotient m_i.  Larger b-labels get
    smaller residues, so the left Young subgroup of the matching double
    coset is S_{rev(beta)} (value-descending residue blocks).
    """
    m = tuple(m)
    n = len(m)
    a = tuple(a)
    b = tuple(b) if b is not None else (1,) * n
    t = AffinePerm(tuple((n - i) + m[i] * n for i in range(n)))
    u = from_finite(standardize_desc(tuple(reversed(b))))
    v = from_finite(standardize(a))
    return u * t * v.inverse()


def paff(m, a, b=None) -> DoubleCoset:
    """The double coset S_{rev(beta)} paff0 S_alpha attached to a sorted orbit."""
    n = len(m)
    b = tuple(b) if b is not None else (1,) * n
    alpha = _content_composition(a)
    beta = tuple(reversed(_content_composition(b)))
    w = paff0(m, a, b)
    return coset_reps(w, alpha, beta)


def _content_composition(vec) -> tuple[int, ...]:
    counts: dict[int, int] = {}
    for x in vec:
        counts[abs(x)] = counts.get(abs(x), 0) + 1
    return tuple(counts[v] for v in sorted(counts))


def paff_inverse(w: AffinePerm, alpha, beta_left):
    """Recover the sorted orbit [m, a, b] from any representative of
    S_{beta_left} w S_alpha.

    beta_left is the left Young composition in residue order; its blocks
    carry b-values len(beta_left), ..., 1 (value-descending).  Labels come
    out as 1..len(alpha) and 1..len(beta_left)."""
    from ..pathstats.orbits import canonicalize

    n = w.n
    w = coset_reps(w, alpha, beta_left).rep_max
    asc = []
    for label, part in enumerate(alpha, start=1):
        asc.extend([label] * part)
    desc = []
    nb = len(beta_left)
    for s, part in enumerate(beta_left, start=1):
        desc.extend([nb - s + 1] * part)
    triples = []
    for i in range(1, n + 1):
        v = w(i)
        r = (v - 1) % n + 1
        q = (v - r) // n
        triples.append((q, asc[i - 1], desc[r - 1]))
    m = tuple(t[0] for t in triples)
    a = tuple(t[1] for t in triples)
    b = tuple(t[2] for t in triples)
    orbit, _, _ = canonicalize(m, a, b)
    return orbit
