"""Numerical semigroups on two coprime generators, gap counts, Alexander data.

For coprime 2 <= p < q the semigroup S = <p, q> has exactly
delta = (p-1)(q-1)/2 gaps, all below the conductor 2*delta.  The tail counts
alpha_i = #{gaps > i} for i = 0..2*delta-2 drive every invariant downstream:
Floer tower lengths, correction terms, and the Alexander polynomial all read
off this one sequence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple


@dataclass(frozen=True)
class CoprimePair:
    """An ordered coprime pair 2 <= p < q; the constructor sorts its arguments."""

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if p > q:
            object.__setattr__(self, "p", q)
            object.__setattr__(self, "q", p)
            p, q = q, p
        if p < 2:
            raise ValueError("both generators must be at least 2")
        if math.gcd(p, q) != 1:
            raise ValueError(f"({p}, {q}) is not coprime")

    @property
    def product(self) -> int:
        return self.p * self.q

    @property
    def delta(self) -> int:
        return (self.p - 1) * (self.q - 1) // 2


class Witness(NamedTuple):
    """Representation a + c p q = alpha p + beta q, 0 <= alpha < q, 0 <= beta < p."""

    alpha: int
    beta: int
    c: int


@dataclass(frozen=True)
class SemigroupData:
    """Sieved membership of <p, q> plus the gap tail counts alpha."""

    pair: CoprimePair
    delta: int
    gaps: tuple[int, ...]
    alpha: tuple[int, ...]
    member: tuple[bool, ...]

    @property
    def conductor(self) -> int:
        return 2 * self.delta

    def contains(self, s: int) -> bool:
        if s < 0:
            return False
        if s >= self.conductor:
            return True
        return self.member[s]


@lru_cache(maxsize=None)
def build_semigroup(pair: CoprimePair) -> SemigroupData:
    """Sieve <p, q> up to the conductor and tabulate the tail counts."""
    p, q = pair.p, pair.q
    delta = pair.delta
    cond = 2 * delta
    member = [False] * cond
    for s in range(cond):
        member[s] = s == 0 or (s >= p and member[s - p]) or (s >= q and member[s - q])
    gaps = tuple(s for s in range(cond) if not member[s])
    alpha = []
    gaps_below = 0
    for i in range(cond - 1):
        if not member[i]:
            gaps_below += 1
        alpha.append(delta - gaps_below)
    assert len(gaps) == delta and alpha[0] == delta and alpha[-1] == 1
    return SemigroupData(
        pair=pair, delta=delta, gaps=gaps, alpha=tuple(alpha), member=tuple(member)
    )


def membership(sg: SemigroupData, a: int) -> Witness:
    """Witness for 0 <= a < p q; c = 0 exactly when a lies in the semigroup."""
    p, q = sg.pair.p, sg.pair.q
    if not 0 <= a < p * q:
        raise ValueError("a must lie in [0, p*q)")
    al = a * pow(p, -1, q) % q
    be = (a - al * p) // q
    w = Witness(al, be, 0) if be >= 0 else Witness(al, be + p, 1)
    assert a + w.c * p * q == w.alpha * p + w.beta * q and 0 <= w.beta < p
    assert (w.c == 0) == sg.contains(a)
    return w


def count_gaps_ge(sg: SemigroupData, a: int) -> int:
    """#{gaps of S at least a}; this is alpha_{a-1} for 1 <= a <= 2*delta - 1."""
    if a <= 0:
        return sg.delta
    if a - 1 < len(sg.alpha):
        return sg.alpha[a - 1]
    return 0


@dataclass(frozen=True)
class AlexanderData:
    """Symmetric Alexander polynomial of T(p, q), expanded around its center.

    coeffs[k] is the t^k coefficient of Delta(t) (degree 2*delta), a[j] the
    t^(delta+j) one.  q_coeffs are the alpha_i: Delta(t) factors as
    1 + delta (t - 1) + (t - 1)^2 sum_i alpha_i t^i.  The centered second
    derivative is the value of (t^-delta Delta)'' at t = 1, always even.
    """

    delta: int
    coeffs: tuple[int, ...]
    a: tuple[int, ...]
    q_coeffs: tuple[int, ...]
    second_derivative_centered: int


def alexander(sg: SemigroupData) -> AlexanderData:
    """Expand Delta(t) from the tail counts and cross-check its normalization."""
    delta = sg.delta
    qc = sg.alpha
    coeffs = [0] * (2 * delta + 1)
    coeffs[0] += 1 - delta
    coeffs[1] += delta
    for i, c in enumerate(qc):
        coeffs[i] += c
        coeffs[i + 1] -= 2 * c
        coeffs[i + 2] += c
    assert sum(coeffs) == 1
    assert sum(k * c for k, c in enumerate(coeffs)) == delta
    assert all(coeffs[k] == coeffs[2 * delta - k] for k in range(delta + 1))
    a = tuple(coeffs[delta + j] for j in range(delta + 1))
    sec = 2 * sum(j * j * aj for j, aj in enumerate(a))
    assert sec == 2 * sum(qc) + delta - delta * delta
    return AlexanderData(
        delta=delta,
        coeffs=tuple(coeffs),
        a=a,
        q_coeffs=tuple(qc),
        second_derivative_centered=sec,
    )
