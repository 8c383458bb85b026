"""Partitions, strict compositions, and the classical statistics on them."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial

Partition = tuple[int, ...]
Composition = tuple[int, ...]


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n, in reverse-lexicographic (dominance-refining) order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out: list[Partition] = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def is_partition(lam) -> bool:
    lam = tuple(lam)
    return all(a >= b for a, b in zip(lam, lam[1:])) and all(a > 0 for a in lam)


def check_partition(lam) -> Partition:
    lam = tuple(int(a) for a in lam)
    if not is_partition(lam):
        raise ValueError("not a partition: %r" % (lam,))
    return lam


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    out = [0] * lam[0]
    for part in lam:
        for i in range(part):
            out[i] += 1
    return tuple(out)


def dominates(lam: Partition, mu: Partition) -> bool:
    """lam >= mu in dominance order (partial sums; same size assumed)."""
    s1 = s2 = 0
    for i in range(max(len(lam), len(mu))):
        s1 += lam[i] if i < len(lam) else 0
        s2 += mu[i] if i < len(mu) else 0
        if s1 < s2:
            return False
    return sum(lam) == sum(mu)


def zee(lam: Partition) -> int:
    """z_lambda = prod i^{m_i} m_i!."""
    out = 1
    mult: dict[int, int] = {}
    for part in lam:
        mult[part] = mult.get(part, 0) + 1
    for part, m in mult.items():
        out *= part**m * factorial(m)
    return out


def n_stat(lam: Partition) -> int:
    """n(lambda) = sum (i-1) lambda_i."""
    return sum(i * part for i, part in enumerate(lam))


def nprime_stat(lam: Partition) -> int:
    """n(lambda') = sum binom(lambda_i, 2); defined for compositions too."""
    return sum(part * (part - 1) // 2 for part in lam)


def iota_stat(lam: Partition) -> int:
    """Number of cells strictly below the main diagonal: sum min(lambda_i, i-1)."""
    return sum(min(part, i) for i, part in enumerate(lam))


def partition_stats(lam: Partition) -> tuple[int, int, int]:
    lam = check_partition(lam)
    return n_stat(lam), nprime_stat(lam), iota_stat(lam)


def hooks(lam: Partition):
    """Yield (arm, leg) for each cell of the diagram."""
    lamc = conjugate(lam)
    for i, part in enumerate(lam):
        for j in range(part):
            yield part - j - 1, lamc[j] - i - 1


def compositions_of(n: int) -> tuple[Composition, ...]:
    """All 2^(n-1) strict compositions of n, lexicographically."""
    if n == 0:
        return ((),)
    out: list[Composition] = []

    def go(rest: int, acc: tuple[int, ...]):
        if rest == 0:
            out.append(acc)
            return
        for first in range(1, rest + 1):
            go(rest - first, acc + (first,))

    go(n, ())
    return tuple(sorted(out))


def rearrangements(lam: Partition) -> tuple[Composition, ...]:
    """Distinct rearrangements of a partition, sorted."""
    return tuple(sorted(set(permutations(lam))))


def sort_to_partition(alpha: Composition) -> Partition:
    return tuple(sorted((a for a in alpha if a), reverse=True))


def multiplicity_factorial(lam: Partition) -> int:
    out = 1
    mult: dict[int, int] = {}
    for part in lam:
        mult[part] = mult.get(part, 0) + 1
    for m in mult.values():
        out *= factorial(m)
    return out


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)
