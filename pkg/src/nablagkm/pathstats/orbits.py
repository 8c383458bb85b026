"""Sorted label orbits over the super alphabet and the dinv statistic.

Letters are nonzero integers: c > 0 is the plain letter c, c < 0 is the
barred letter |c|.  The total order is 1 < -1 < 2 < -2 < ... (barred letters
sit just above their plain versions).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from ..exactalg import MPoly, RatFrac

SuperLetter = int


def letter_key(c: SuperLetter):
    """Position of the letter in the order 1 < -1 < 2 < -2 < ..."""
    if c == 0:
        raise ValueError("letters are nonzero integers")
    return (abs(c), 1 if c < 0 else 0)


def epsilon(b1: SuperLetter, b2: SuperLetter) -> int:
    """1 if b1 > b2 in the super order, or b1 = b2 is barred; else 0."""
    if b1 == b2:
        return 1 if b1 < 0 else 0
    return 1 if letter_key(b1) > letter_key(b2) else 0


@dataclass(frozen=True)
class LabeledOrbit:
    """Canonical sorted representative of an S_n orbit [m, a(, b)]."""

    m: tuple[int, ...]
    labels: tuple[tuple[SuperLetter, ...], ...]  # one or two label vectors

    def __post_init__(self):
        n = len(self.m)
        if any(len(lab) != n for lab in self.labels):
            raise ValueError("label length mismatch")
        if not self.is_sorted():
            raise ValueError("orbit is not in sorted form")

    @property
    def n(self) -> int:
        return len(self.m)

    def triple(self, i: int):
        return (-self.m[i],) + tuple(letter_key(lab[i]) for lab in self.labels)

    def is_sorted(self) -> bool:
        return all(self.triple(i) <= self.triple(i + 1) for i in range(self.n - 1))

    def weight(self) -> int:
        return sum(self.m)


def canonicalize(m, a, b=None):
    """Sorted representative, stabilizer composition, and aut_q factor."""
    m = tuple(int(x) for x in m)
    labels = [tuple(a)] + ([tuple(b)] if b is not None else [])
    n = len(m)
    if any(len(lab) != n for lab in labels):
        raise ValueError("label length mismatch")
    keys = []
    for i in range(n):
        keys.append((-m[i],) + tuple(letter_key(lab[i]) for lab in labels))
    order = sorted(range(n), key=lambda i: keys[i])
    sm = tuple(m[i] for i in order)
    slabs = tuple(tuple(lab[i] for i in order) for lab in labels)
    orbit = LabeledOrbit(sm, slabs)
    alpha = stabilizer_composition(orbit)
    return orbit, alpha, aut_q(alpha)


def stabilizer_composition(orbit: LabeledOrbit) -> tuple[int, ...]:
    """Run lengths of equal (m_i, labels_i) columns."""
    alpha = []
    run = 1
    for i in range(1, orbit.n):
        if orbit.triple(i) == orbit.triple(i - 1):
            run += 1
        else:
            alpha.append(run)
            run = 1
    alpha.append(run)
    return tuple(alpha)


def q_int(k: int) -> list[int]:
    """[k]_q as an integer coefficient list."""
    return [1] * k


def q_factorial(k: int) -> list[int]:
    out = [1]
    for i in range(2, k + 1):
        out = poly_mul_int(out, q_int(i))
    return out


def poly_mul_int(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def aut_q_poly(alpha) -> list[int]:
    out = [1]
    for part in alpha:
        out = poly_mul_int(out, q_factorial(part))
    return out


def aut_q(alpha) -> RatFrac:
    """prod_i [alpha_i]_q! as an element of the q,t coefficient field."""
    from ..exactalg import QT

    return RatFrac.from_poly(
        MPoly(QT, {(i, 0): c for i, c in enumerate(aut_q_poly(alpha)) if c})
    )


def standardize(a) -> tuple[int, ...]:
    """The permutation sorting a, ties increasing for plain letters and
    decreasing for barred ones."""
    a = tuple(a)
    n = len(a)
    order = sorted(range(n), key=lambda p: (letter_key(a[p]), p if a[p] > 0 else -p))
    sigma = [0] * n
    for rank, p in enumerate(order):
        sigma[p] = rank + 1
    return tuple(sigma)


def standardize_desc(b) -> tuple[int, ...]:
    """The permutation sorting b decreasingly, ties keeping position order."""
    b = tuple(b)
    n = len(b)
    order = sorted(range(n), key=lambda p: (tuple(-x for x in letter_key(b[p])), p))
    sigma = [0] * n
    for rank, p in enumerate(order):
        sigma[p] = rank + 1
    return tuple(sigma)


def dinv_pair(m, a, b, i, j, k) -> int:
    e = epsilon(a[i], a[j])
    if b is not None:
        e += epsilon(b[i], b[j])
    return max(m[j] - m[i] - 1 + k + e, 0)


def dinv_k(orbit: LabeledOrbit, k: int) -> int:
    """Sum over pairs i < j of max(m_j - m_i - 1 + k + eps_a + eps_b, 0)."""
    m = orbit.m
    a = orbit.labels[0]
    b = orbit.labels[1] if len(orbit.labels) > 1 else None
    total = 0
    for i in range(orbit.n):
        for j in range(i + 1, orbit.n):
            total += dinv_pair(m, a, b, i, j, k)
    return total


def dinv_k_raw(m, a, b, k: int) -> int:
    """dinv on raw sorted vectors (no orbit construction overhead)."""
    total = 0
    n = len(m)
    for i in range(n):
        mi = m[i]
        ai = a[i]
        for j in range(i + 1, n):
            e = epsilon(ai, a[j])
            if b is not None:
                e += epsilon(b[i], b[j])
            v = m[j] - mi - 1 + k + e
            if v > 0:
                total += v
    return total


def negate_labels(a) -> tuple[SuperLetter, ...]:
    return tuple(-x for x in a)
