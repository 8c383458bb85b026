"""Dyck paths, partial Dyck paths, and attack paths of sorted orbits."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .orbits import epsilon


@dataclass(frozen=True)
class DyckPath:
    """Bit string of length 2n: 1 = North, 0 = East, never below the diagonal."""

    bits: tuple[int, ...]

    def __post_init__(self):
        ones = zeros = 0
        for b in self.bits:
            if b == 1:
                ones += 1
            elif b == 0:
                zeros += 1
            else:
                raise ValueError("bits must be 0/1")
            if zeros > ones:
                raise ValueError("path dips below the diagonal")
        if ones != zeros:
            raise ValueError("unbalanced path")

    @property
    def n(self) -> int:
        return len(self.bits) // 2

    @staticmethod
    def from_string(s: str) -> "DyckPath":
        return DyckPath(tuple(int(c) for c in s))

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)

    @staticmethod
    def from_cols(cols) -> "DyckPath":
        """cols[j] = number of East steps before the (j+1)-st North step."""
        cols = tuple(cols)
        n = len(cols)
        bits = []
        prev = 0
        for c in cols:
            bits.extend([0] * (c - prev))
            bits.append(1)
            prev = c
        bits.extend([0] * (n - prev))
        return DyckPath(tuple(bits))

    def cols(self) -> tuple[int, ...]:
        out = []
        east = 0
        for b in self.bits:
            if b:
                out.append(east)
            else:
                east += 1
        return tuple(out)

    def area_set(self) -> frozenset[tuple[int, int]]:
        """D(pi): pairs (i, j), i < j, with the cell between path and diagonal."""
        c = self.cols()
        return frozenset(
            (i, j)
            for j in range(1, self.n + 1)
            for i in range(1, j)
            if c[j - 1] <= i - 1
        )

    def alpha(self) -> tuple[int, ...]:
        """Contact composition: diagonal cut points of lines through the edges."""
        cuts = {0, self.n}
        c = self.cols()
        # a North run starting at height h sits on the vertical line x = c
        for j in range(self.n):
            if j == 0 or c[j] != c[j - 1]:
                cuts.add(c[j])
        # an East run at height h lies on the horizontal line y = h
        height = 0
        run = False
        for b in self.bits:
            if b:
                height += 1
                run = False
            else:
                if not run:
                    cuts.add(height)
                    run = True
        pts = sorted(cuts)
        return tuple(b - a for a, b in zip(pts, pts[1:]))

    def touch_points(self) -> tuple[int, ...]:
        """Interior diagonal contacts 0 < p < n."""
        ones = zeros = 0
        out = []
        for b in self.bits[:-1]:
            if b:
                ones += 1
            else:
                zeros += 1
            if ones == zeros and 0 < ones < self.n:
                out.append(ones)
        return tuple(sorted(set(out)))

    def trailing_east(self) -> int:
        k = 0
        for b in reversed(self.bits):
            if b:
                break
            k += 1
        return k

    def inv_label(self, b) -> int:
        """#(super) inversions of the label vector over the area set."""
        return sum(epsilon(b[i - 1], b[j - 1]) for i, j in self.area_set())


@lru_cache(maxsize=None)
def all_dyck_paths(n: int) -> tuple[DyckPath, ...]:
    out: list[DyckPath] = []

    def go(bits, ones, zeros):
        if ones == zeros == n:
            out.append(DyckPath(tuple(bits)))
            return
        if ones < n:
            go(bits + [1], ones + 1, zeros)
        if zeros < ones:
            go(bits + [0], ones, zeros + 1)

    go([], 0, 0)
    return tuple(sorted(out, key=lambda p: p.bits, reverse=True))


@dataclass(frozen=True)
class PartialDyckPath:
    """(pi, l) with l at most the number of trailing East steps of pi."""

    path: DyckPath
    l: int

    def __post_init__(self):
        if not 0 <= self.l <= self.path.trailing_east():
            raise ValueError(
                "l=%d exceeds trailing East steps of %s" % (self.l, self.path)
            )

    @property
    def n(self) -> int:
        return self.path.n

    @staticmethod
    def from_string(s: str) -> "PartialDyckPath":
        """Parse the truncated form, e.g. '1101' means (110100, 2)."""
        ones = s.count("1")
        zeros = s.count("0")
        if ones < zeros:
            raise ValueError("more East than North steps: %r" % s)
        l = ones - zeros
        return PartialDyckPath(DyckPath.from_string(s + "0" * l), l)

    def __str__(self) -> str:
        s = str(self.path)
        return s[: len(s) - self.l] if self.l else s


def attack_path(m, a, k: int) -> tuple[DyckPath, PartialDyckPath]:
    """The Dyck path whose area set is the attack relation of sorted (m, a),
    together with the partial path (pi, #zeros of m)."""
    m = tuple(m)
    a = tuple(a)
    n = len(m)
    from .orbits import letter_key

    if any(
        (-m[i], letter_key(a[i])) > (-m[i + 1], letter_key(a[i + 1]))
        for i in range(n - 1)
    ):
        raise ValueError("(m, a) is not sorted")
    cols = []
    for j in range(n):
        attackers = [
            i for i in range(j) if m[j] - m[i] - 1 + k + epsilon(a[i], a[j]) >= 0
        ]
        if attackers:
            lo = min(attackers)
            if attackers != list(range(lo, j)):
                raise AssertionError("attack set is not an interval at %d" % (j + 1))
            cols.append(lo)
        else:
            cols.append(j)
    if any(x > y for x, y in zip(cols, cols[1:])):
        raise AssertionError("attack columns are not monotone")
    path = DyckPath.from_cols(cols)
    z = sum(1 for x in m if x == 0)
    return path, PartialDyckPath(path, z)
