"""Star-shaped plumbing data and the tau staircase for +1 surgery on torus knots.

The orientation reversal of +1 surgery on T(p, q) is Seifert fibered over three
exceptional arms; its tau function (whose partial sums of step increments
govern the Floer towers) admits both a direct summation and a closed form in
generalized Dedekind sums.  Both routes live here and are kept independent so
they can check each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .numtheory import (
    dedekind_sum,
    dedekind_sum_general,
    divides_indicator,
    divides_indicator_pair,
    sawtooth,
)
from .semigroup import CoprimePair, build_semigroup, count_gaps_ge


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


@dataclass(frozen=True)
class SeifertData:
    """Central weight e0 and arms (alpha_l, omega_l), 0 < omega_l < alpha_l coprime.

    Only negative orbifold Euler number e is accepted; everything downstream
    assumes the negative definite regime.  Integral homology spheres are the
    ones with e0 alpha + sum omega_l alpha_hat_l = -1.
    """

    e0: int
    arms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for a, w in self.arms:
            if not 0 < w < a:
                raise ValueError(f"arm ({a}, {w}) needs 0 < omega < alpha")
            if math.gcd(a, w) != 1:
                raise ValueError(f"arm ({a}, {w}) is not coprime")
        if self.e >= 0:
            raise ValueError("orbifold Euler number must be negative")

    @property
    def nu(self) -> int:
        return len(self.arms)

    @property
    def e(self) -> Fraction:
        return self.e0 + sum(Fraction(w, a) for a, w in self.arms)

    @property
    def alpha_product(self) -> int:
        out = 1
        for a, _ in self.arms:
            out *= a
        return out

    def alpha_hat(self, l: int) -> int:
        return self.alpha_product // self.arms[l][0]

    @property
    def epsilon(self) -> Fraction:
        return (2 - self.nu + sum(Fraction(1, a) for a, _ in self.arms)) / self.e

    @property
    def is_homology_sphere(self) -> bool:
        total = self.e0 * self.alpha_product
        total += sum(w * self.alpha_hat(l) for l, (_, w) in enumerate(self.arms))
        return total == -1

    def arm_divisor_count(self, b: int) -> int:
        """How many arm orders alpha_l divide b."""
        return sum(divides_indicator(a, b) for a, _ in self.arms)


def plus_one_surgery(pair: CoprimePair) -> SeifertData:
    """Seifert data of the orientation reversal of +1 surgery on T(p, q).

    Central weight -2 and arms (p, p'), (q, q'), (pq - 1, pq - 2) where
    p' q = 1 (mod p) and p q' = 1 (mod q).  The result is always an integral
    homology sphere, and that is asserted.
    """
    p, q = pair.p, pair.q
    pprime = pow(q, -1, p)
    qprime = pow(p, -1, q)
    sd = SeifertData(e0=-2, arms=((p, pprime), (q, qprime), (p * q - 1, p * q - 2)))
    if not sd.is_homology_sphere:
        raise AssertionError(f"surgery data for {pair} failed the homology check")
    return sd


def k2_plus_s(sd: SeifertData) -> Fraction:
    """Exact K^2 + s of the canonical plumbing, via classical Dedekind sums."""
    e = sd.e
    eps = sd.epsilon
    return eps * eps * e + e + 5 - 12 * sum(dedekind_sum(w, a) for a, w in sd.arms)


def tau_step(sd: SeifertData, j: int) -> int:
    """Increment tau(j+1) - tau(j) = 1 - j e0 - sum_l ceil(j omega_l / alpha_l)."""
    return 1 - j * sd.e0 - sum(_ceil_div(j * w, a) for a, w in sd.arms)


def tau_step_sawtooth(sd: SeifertData, j: int) -> Fraction:
    """The same increment through sawtooth values; integer for every j.

    Equals sum_l ((j omega_l / alpha_l)) + 1 - nu/2 - j e + (arm divisors of j)/2;
    for homology spheres -j e is j / alpha_product.
    """
    return (
        sum(sawtooth(Fraction(j * w, a)) for a, w in sd.arms)
        + 1
        - Fraction(sd.nu, 2)
        - j * sd.e
        + Fraction(sd.arm_divisor_count(j), 2)
    )


def tau_direct(sd: SeifertData, m: int) -> int:
    """tau(m) as the defining sum of increments over j in [0, m)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return sum(tau_step(sd, j) for j in range(m))


def tau_direct_values(sd: SeifertData, m_max: int) -> list[int]:
    """[tau(0), ..., tau(m_max)] by one prefix-sum pass; the brute-force oracle."""
    vals = [0]
    total = 0
    for j in range(m_max):
        total += tau_step(sd, j)
        vals.append(total)
    return vals


def _decompose(sd: SeifertData, m: int) -> tuple[int, list[int]]:
    """m = d alpha + sum_l a_l alpha_hat_l with 0 <= a_l < alpha_l, d integral."""
    rem = m
    parts = []
    for l, (a, _) in enumerate(sd.arms):
        ahat = sd.alpha_hat(l)
        a_l = m * pow(ahat, -1, a) % a
        parts.append(a_l)
        rem -= a_l * ahat
    d_m, leftover = divmod(rem, sd.alpha_product)
    if leftover:
        raise AssertionError("base decomposition of m failed")
    return d_m, parts


def tau_compact(sd: SeifertData, m: int) -> int:
    """Closed-form tau(m): no summation over j, only Dedekind sums per arm.

    Requires an integral homology sphere (the inverses of alpha_hat_l mod
    alpha_l exist exactly then) and m >= 0.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if not sd.is_homology_sphere:
        raise ValueError("compact evaluation needs an integral homology sphere")
    d_m, _ = _decompose(sd, m)
    total = Fraction(0)
    for l, (a, _) in enumerate(sd.arms):
        ahat = sd.alpha_hat(l)
        total += (
            Fraction((m - 1) // a, 2)
            - dedekind_sum_general(ahat, a, Fraction(m, a))
            + dedekind_sum(ahat, a)
        )
    total += Fraction(m * m, 2 * sd.alpha_product) + m * (1 - Fraction(sd.nu, 2))
    total += -Fraction(d_m, 2) + Fraction(sd.nu, 4) + Fraction(sd.arm_divisor_count(m), 4)
    if total.denominator != 1:
        raise AssertionError("tau must be an integer")
    return int(total)


def tau_compact_alt(sd: SeifertData, m: int) -> int:
    """Closed-form variant that avoids decomposing m, as a cross-check route."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if not sd.is_homology_sphere:
        raise ValueError("compact evaluation needs an integral homology sphere")
    total = Fraction(0)
    for l, (a, w) in enumerate(sd.arms):
        ahat = sd.alpha_hat(l)
        total += (
            -sawtooth(Fraction(m * w, a)) / 2
            + Fraction((m - 1) // a, 2)
            - dedekind_sum_general(ahat, a, Fraction(m, a))
            + dedekind_sum(ahat, a)
        )
    total += m * (1 - Fraction(sd.nu, 2)) + Fraction(sd.nu, 2)
    total += Fraction(m * (m - 1), 2 * sd.alpha_product)
    if total.denominator != 1:
        raise AssertionError("tau must be an integer")
    return int(total)


@dataclass(frozen=True)
class TauProfile:
    """Extremum profile of a tau staircase.

    Minima and maxima values alternate m_0, M_0, m_1, ...; positions are
    absolute j coordinates where known (+1 surgery) and None where the theory
    provides values only (-1 surgery).
    """

    delta: int
    minima_values: tuple[int, ...]
    maxima_values: tuple[int, ...]
    minima_positions: tuple[int, ...] | None
    maxima_positions: tuple[int, ...] | None
    global_min: int
    global_min_index: int
    global_min_position: int | None


def tau_profile(pair: CoprimePair) -> TauProfile:
    """Tau extrema for +1 surgery: 2*delta - 1 minima at n(pq - 1) interleaved
    with 2*delta - 2 maxima at n pq + 1, the global minimum sitting at index
    delta - 1."""
    sg = build_semigroup(pair)
    dl = sg.delta
    pq = pair.product
    minima_pos = tuple(n * (pq - 1) for n in range(2 * dl - 1))
    maxima_pos = tuple(n * pq + 1 for n in range(2 * dl - 2))
    maxima_vals = tuple(n * (n - 2 * dl + 3) // 2 + 1 for n in range(2 * dl - 2))
    minima_vals = [0]
    for n in range(2 * dl - 2):
        minima_vals.append(maxima_vals[n] - sg.alpha[n + 1])
    gmin_idx = dl - 1
    return TauProfile(
        delta=dl,
        minima_values=tuple(minima_vals),
        maxima_values=maxima_vals,
        minima_positions=minima_pos,
        maxima_positions=maxima_pos,
        global_min=minima_vals[gmin_idx],
        global_min_index=gmin_idx,
        global_min_position=minima_pos[gmin_idx],
    )


def d_via_tau(pair: CoprimePair) -> int:
    """Correction term of +1 surgery through the Seifert staircase.

    d = delta(delta - 3) + 2 tau(m) at the global minimum m = (delta-1)(pq-1),
    with tau evaluated by the closed form.
    """
    dl = pair.delta
    sd = plus_one_surgery(pair)
    tmin = tau_compact(sd, (dl - 1) * (pair.product - 1))
    return dl * (dl - 3) + 2 * tmin


def d_via_dedekind(pair: CoprimePair) -> int:
    """Correction term of +1 surgery as a single Dedekind sum expression.

    No staircase and no Floer data enter: just floor terms, a membership bit
    for delta - 1, and two generalized Dedekind sums.  The result is asserted
    to be an even integer.
    """
    p, q = pair.p, pair.q
    dl = pair.delta
    sg = build_semigroup(pair)
    c = 0 if sg.contains(dl - 1) else 1
    val = (
        -1
        - Fraction((dl - 1) * (dl - 2), p * q)
        - Fraction(p * p + q * q - 3 * p - 3 * q - 2, 6 * p * q)
        - _ceil_div(dl, p)
        - _ceil_div(dl, q)
        + c
        + Fraction(divides_indicator_pair(p, q, dl - 1), 2)
        + 2 * dedekind_sum_general(p, q, Fraction(dl - 1, q))
        + 2 * dedekind_sum_general(q, p, Fraction(dl - 1, p))
    )
    if val.denominator != 1 or val.numerator % 2:
        raise AssertionError(f"correction term for {pair} is not an even integer: {val}")
    return int(val)


def d_via_gap_count(pair: CoprimePair) -> int:
    """Correction term of +1 surgery as -2 #{gaps >= delta}, pure counting."""
    sg = build_semigroup(pair)
    return -2 * count_gaps_ge(sg, sg.delta)
