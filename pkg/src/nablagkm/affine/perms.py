"""Extended affine permutations in window notation.

A window (w_1, ..., w_n) with pairwise distinct residues mod n determines
the bijection w(i + kn) = w_i + kn of the integers.  The degree d is read
off from sum(w) = n(n+1)/2 + dn; left multiplication acts on values, right
multiplication on positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import ceil


@dataclass(frozen=True)
class AffinePerm:
    window: tuple[int, ...]

    def __post_init__(self):
        n = len(self.window)
        if n == 0:
            raise ValueError("empty window")
        if len({w % n for w in self.window}) != n:
            raise ValueError("window residues are not distinct: %r" % (self.window,))

    @property
    def n(self) -> int:
        return len(self.window)

    @property
    def d(self) -> int:
        n = self.n
        num = sum(self.window) - n * (n + 1) // 2
        if num % n:
            raise AssertionError("window sum violates the degree constraint")
        return num // n

    def __call__(self, i: int) -> int:
        n = self.n
        r = (i - 1) % n
        return self.window[r] + (i - 1 - r)

    def compose(self, other: "AffinePerm") -> "AffinePerm":
        """(self o other)(i) = self(other(i))."""
        if self.n != other.n:
            raise ValueError("size mismatch")
        return AffinePerm(tuple(self(other.window[i]) for i in range(self.n)))

    __mul__ = compose

    def inverse(self) -> "AffinePerm":
        # if w(i) = v then w^{-1}(v) = i; shift v to its residue representative
        n = self.n
        win = [0] * n
        for i in range(1, n + 1):
            v = self(i)
            r = (v - 1) % n + 1
            win[r - 1] = i - (v - r)
        return AffinePerm(tuple(win))

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.n + 1))

    def is_positive(self) -> bool:
        """Member of the monoid W_+ (window entries all positive)."""
        return all(w >= 1 for w in self.window)

    def translation_part(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """w = y^mu . sigma: returns (mu, sigma window) with sigma finite."""
        n = self.n
        sigma = [0] * n
        mu = [0] * n
        for i in range(1, n + 1):
            v = self(i)
            r = (v - 1) % n + 1
            sigma[i - 1] = r
            mu[r - 1] = (v - r) // n
        return tuple(mu), tuple(sigma)

    def __repr__(self) -> str:
        return "[%s]" % ",".join(str(w) for w in self.window)


def identity(n: int) -> AffinePerm:
    return AffinePerm(tuple(range(1, n + 1)))


def rho(n: int, d: int = 1) -> AffinePerm:
    return AffinePerm(tuple(i + d for i in range(1, n + 1)))


def simple_reflection(n: int, i: int) -> AffinePerm:
    """s_i for i in 0..n-1, as a window (swaps the values i, i+1 mod n)."""
    if not 0 <= i <= n - 1:
        raise ValueError("simple reflection index out of range")
    if i == 0:
        if n == 1:
            raise ValueError("no affine simple reflection for n = 1")
        win = list(range(1, n + 1))
        win[0] = 0
        win[n - 1] = n + 1
        return AffinePerm(tuple(win))
    win = list(range(1, n + 1))
    win[i - 1], win[i] = i + 1, i
    return AffinePerm(tuple(win))


def translation(n: int, i: int) -> AffinePerm:
    """y_i: i -> i + n, fixing the other residues."""
    win = list(range(1, n + 1))
    win[i - 1] += n
    return AffinePerm(tuple(win))


def translation_vec(n: int, mu) -> AffinePerm:
    win = [i + 1 + n * mu[i] for i in range(n)]
    return AffinePerm(tuple(win))


def transposition(n: int, a: int, b: int) -> AffinePerm:
    """t_{a,b}: swaps a + kn and b + kn for all k (a != b mod n)."""
    if (a - b) % n == 0:
        raise ValueError("transposition needs distinct residues")
    win = list(range(1, n + 1))
    for v, target in ((a, b), (b, a)):
        r = (v - 1) % n + 1
        win[r - 1] = target - (v - r)
    return AffinePerm(tuple(win))


def from_finite(perm) -> AffinePerm:
    return AffinePerm(tuple(perm))


def inv_pair(w: AffinePerm, i: int, j: int) -> int:
    """inv^{i,j}(w) = max(ceil((w_i - w_j)/n), ceil((w_j - w_i)/n - 1))."""
    n = w.n
    wi, wj = w.window[i - 1], w.window[j - 1]
    return max(ceil((wi - wj) / n), ceil((wj - wi) / n - 1))


def inv(w: AffinePerm) -> int:
    return sum(
        inv_pair(w, i, j) for i in range(1, w.n + 1) for j in range(i + 1, w.n + 1)
    )


def inv_k_pair(w: AffinePerm, i: int, j: int, k: int) -> int:
    return min(k, inv_pair(w, i, j))


def dinv_k_window(w: AffinePerm, k: int) -> int:
    """dinv_k(w) = sum over residue pairs of max(k - inv^{i,j}(w^{-1}), 0)."""
    wi = w.inverse()
    n = w.n
    return sum(
        max(k - inv_pair(wi, i, j), 0)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    )


def inv_k_total(w: AffinePerm, k: int) -> int:
    """Number of moment-graph edges of height < kn at w: sum min(k, inv^{i,j}(w^{-1}))."""
    wi = w.inverse()
    n = w.n
    return sum(
        min(k, inv_pair(wi, i, j))
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    )


def inversions(w: AffinePerm) -> list[tuple[int, int]]:
    """Inversion value pairs: (a, b) with a in 1..n, a < b, w^{-1}(a) > w^{-1}(b).

    One representative per shift orbit of the reflections t_{a,b} with
    t_{a,b} w < w; the count must equal inv(w).
    """
    n = w.n
    wi = w.inverse()
    out = []
    win = wi.window
    spread = (max(win) - min(win)) // n + 2
    for a in range(1, n + 1):
        ia = wi(a)
        for b in range(a + 1, a + n * (spread + 1)):
            if (b - a) % n == 0:
                continue
            if wi(b) < ia:
                out.append((a, b))
    assert len(out) == inv(w), "inversion enumeration inconsistent with inv()"
    return out


def left_descents(w: AffinePerm) -> list[int]:
    """i in 0..n-1 with s_i w < w, i.e. w^{-1}(i) > w^{-1}(i+1)."""
    wi = w.inverse()
    return [i for i in range(w.n) if wi(i) > wi(i + 1)]


def reduced_word(w: AffinePerm) -> tuple[list[int], int]:
    """w = s_{i_1} ... s_{i_l} rho^d with l = inv(w); greedy left-stripping."""
    d = w.d
    word: list[int] = []
    current = w
    target = rho(w.n, d) if d else identity(w.n)
    guard = inv(w)
    while current != target:
        ds = left_descents(current)
        if not ds:
            raise AssertionError("no descent found before reaching rho^d")
        i = ds[0]
        word.append(i)
        current = simple_reflection(w.n, i) * current
        if len(word) > guard:
            raise AssertionError("reduced word exceeded inv(w)")
    return word, d


@lru_cache(maxsize=None)
def _covers_down_cached(w: AffinePerm):
    out = []
    iw = inv(w)
    for a, b in inversions(w):
        u = transposition(w.n, a, b) * w
        if inv(u) == iw - 1:
            out.append((u, (a, b)))
    return tuple(out)


def covers_down(w: AffinePerm):
    """All (u, (a,b)) with u = t_{a,b} w covered by w in Bruhat order."""
    return _covers_down_cached(w)


@lru_cache(maxsize=None)
def lower_set(w: AffinePerm) -> frozenset[AffinePerm]:
    """{v : v <= w} in Bruhat order (within the same rho-component)."""
    out = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for v in frontier:
            for u, _ in covers_down(v):
                if u not in out:
                    out.add(u)
                    nxt.append(u)
        frontier = nxt
    return frozenset(out)


def bruhat_leq(u: AffinePerm, v: AffinePerm) -> bool:
    if u.n != v.n:
        raise ValueError("size mismatch")
    if u.d != v.d:
        return False
    if inv(u) > inv(v):
        return False
    if u == v:
        return True
    return u in lower_set(v)


def bruhat_interval_is_lower_set(vertices) -> bool:
    vs = set(vertices)
    return all(lower_set(w) <= vs for w in vs)
