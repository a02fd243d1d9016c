"""Torus knot signature spectrum, Levine-Tristram jumps, and the bound suite.

The spectrum of T(p, q) is the 2*delta points i/p + j/q (1 <= i < p,
1 <= j < q), stored as integer numerators over pq so every interval count is
a bisect.  Signatures at rational arguments a/pq come from counting spectrum
points in four arcs, with explicit boundary terms and no limiting convention.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .semigroup import CoprimePair, build_semigroup, count_gaps_ge


@dataclass(frozen=True)
class SpectrumData:
    """Spectrum of T(p, q) as sorted numerators over pq; 2*delta distinct points
    in (0, 2), symmetric about 1."""

    pair: CoprimePair
    numerators: tuple[int, ...]

    @property
    def elements(self) -> tuple[Fraction, ...]:
        pq = self.pair.product
        return tuple(Fraction(n, pq) for n in self.numerators)

    def contains_numerator(self, n: int) -> bool:
        i = bisect_left(self.numerators, n)
        return i < len(self.numerators) and self.numerators[i] == n

    def count_ge(self, n: int) -> int:
        """How many spectrum numerators are >= n."""
        return len(self.numerators) - bisect_left(self.numerators, n)


@lru_cache(maxsize=None)
def spectrum(pair: CoprimePair) -> SpectrumData:
    """All i q + j p for 1 <= i < p, 1 <= j < q; distinctness is automatic."""
    p, q = pair.p, pair.q
    nums = sorted(i * q + j * p for i in range(1, p) for j in range(1, q))
    assert len(set(nums)) == (p - 1) * (q - 1)
    assert all(0 < n < 2 * p * q for n in nums)
    return SpectrumData(pair=pair, numerators=tuple(nums))


def tilde_c(pair: CoprimePair, a: int) -> Fraction:
    """Boundary correction at a/pq: +1/2 if 1 + a/pq is a spectrum point,
    -1/2 if a/pq is, else 0.  The two cases exclude each other."""
    sp = spectrum(pair)
    pq = pair.product
    hi = sp.contains_numerator(pq + a)
    lo = sp.contains_numerator(a)
    assert not (hi and lo)
    if hi:
        return Fraction(1, 2)
    if lo:
        return Fraction(-1, 2)
    return Fraction(0)


@dataclass(frozen=True)
class SignatureReport:
    """Levine-Tristram signature at exp(2 pi i a / pq).

    s1..s4 count spectrum points in (0, x], (x, 1), (1, 1 + x), [1 + x, 2)
    for x = a/pq; boundary_hits counts how many of x, 1 + x are themselves
    spectrum points; sigma = s1 + s4 - s2 - s3 + boundary_hits.
    """

    pair: CoprimePair
    a: int
    sigma: int
    s1: int
    s2: int
    s3: int
    s4: int
    boundary_hits: int
    tilde_c: Fraction


def levine_tristram(pair: CoprimePair, a: int) -> SignatureReport:
    """Signature report at a/pq for 0 <= a < pq, by exact interval counts."""
    pq = pair.product
    if not 0 <= a < pq:
        raise ValueError("a must lie in [0, p*q)")
    sp = spectrum(pair)
    nums = sp.numerators
    s1 = bisect_right(nums, a)
    s2 = bisect_left(nums, pq) - s1
    s3 = bisect_left(nums, pq + a) - bisect_left(nums, pq)
    s4 = len(nums) - bisect_left(nums, pq + a)
    hits = int(sp.contains_numerator(a)) + int(sp.contains_numerator(pq + a))
    assert s1 + s2 == s3 + s4 == pair.delta
    return SignatureReport(
        pair=pair,
        a=a,
        sigma=s1 + s4 - s2 - s3 + hits,
        s1=s1,
        s2=s2,
        s3=s3,
        s4=s4,
        boundary_hits=hits,
        tilde_c=tilde_c(pair, a),
    )


def gap_count_identity_check(pair: CoprimePair, a: int) -> bool:
    """Both bridges between gap counts, spectrum tails, and signatures at a.

    #{gaps >= a} must equal the spectrum count in [1 + a/pq, 2) and also
    delta + sigma(a/pq)/4 - (a - floor(a/p) - floor(a/q) - c~(a))/2.
    """
    sg = build_semigroup(pair)
    sp = spectrum(pair)
    pq = pair.product
    rep = levine_tristram(pair, a)
    gaps_ge = count_gaps_ge(sg, a)
    if gaps_ge != sp.count_ge(pq + a):
        return False
    rhs = (
        sg.delta
        + Fraction(rep.sigma, 4)
        - Fraction(a - a // pair.p - a // pair.q, 2)
        + rep.tilde_c / 2
    )
    return rhs == gaps_ge


def d_via_signature(pair: CoprimePair) -> int:
    """Correction term of +1 surgery from the signature jump data at a = delta:
    d = -delta - sigma(delta/pq)/2 - floor(delta/p) - floor(delta/q) - c~(delta)."""
    dl = pair.delta
    rep = levine_tristram(pair, dl)
    val = (
        -dl
        - Fraction(rep.sigma, 2)
        - (dl // pair.p)
        - (dl // pair.q)
        - rep.tilde_c
    )
    if val.denominator != 1 or val.numerator % 2:
        raise AssertionError(f"correction term for {pair} is not an even integer: {val}")
    return int(val)


def mu_plus(pair: CoprimePair) -> int:
    """Twice the spectrum count in [3/2, 2)."""
    sp = spectrum(pair)
    pq = pair.product
    return 2 * sp.count_ge(-((-3 * pq) // 2))


def classical_signature(pair: CoprimePair) -> int:
    """sigma(T(p, q)) = mu_plus - mu_minus, where mu_plus + mu_minus = 2*delta."""
    return 2 * (mu_plus(pair) - pair.delta)


@dataclass(frozen=True)
class InequalityReport:
    """Every certified bound for one pair, with raw values alongside.

    required maps bound names to booleans that must all be True; the
    alternating knot bound is reported separately because it genuinely fails
    for some pairs, (4, 5) being the smallest.
    """

    pair: CoprimePair
    delta: int
    d: int
    sigma: int
    mu_plus: int
    gap_count_at_delta: int
    required: dict[str, bool]
    equalities: dict[str, bool]
    alternating_bound_holds: bool
    alternating_bound_rhs: int

    @property
    def all_required_hold(self) -> bool:
        return all(self.required.values())


def inequality_suite(pair: CoprimePair) -> InequalityReport:
    """Evaluate every bound tying d, sigma, delta, and the spectrum together."""
    from .seifert import d_via_gap_count

    sg = build_semigroup(pair)
    sp = spectrum(pair)
    dl = sg.delta
    q = pair.q
    pq = pair.product
    d = d_via_gap_count(pair)
    sigma = classical_signature(pair)
    mu = mu_plus(pair)
    gap_tail = count_gaps_ge(sg, dl)
    spectral_tail = sp.count_ge(pq + dl)
    required = {
        "neg_d_nonnegative": 0 <= -d,
        "neg_d_le_two_delta": -d <= 2 * dl,
        "neg_d_le_delta_plus_one": -d <= dl + 1,
        "delta_plus_one_le_neg_sigma": dl + 1 <= -sigma,
        "gap_tail_le_half_delta_plus_one": 2 * gap_tail <= dl + 1,
        "spectral_tail_bound": 2 * spectral_tail <= 2 * q - 2 + mu,
        "neg_d_le_2q_bound": -d <= 2 * q - 2 + mu,
        "mu_plus_le_half_delta_minus_one": 2 * mu <= dl - 1,
    }
    equalities = {
        "gap_tail_sharp": 2 * gap_tail == dl + 1,
        "sigma_sharp": dl + 1 == -sigma,
        "expected_gap_tail_sharp": pair.p == 2 and dl % 2 == 1,
        "expected_sigma_sharp": (pair.p, pair.q) == (2, 3),
    }
    alt_rhs = 2 * ((-sigma + 3) // 4)
    return InequalityReport(
        pair=pair,
        delta=dl,
        d=d,
        sigma=sigma,
        mu_plus=mu,
        gap_count_at_delta=gap_tail,
        required=required,
        equalities=equalities,
        alternating_bound_holds=-d <= alt_rhs,
        alternating_bound_rhs=alt_rhs,
    )
