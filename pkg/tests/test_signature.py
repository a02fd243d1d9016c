"""Spectrum counts, signature jump reports, and the certified bound suite."""

from fractions import Fraction

import pytest

from torusfloer import (
    CoprimePair,
    classical_signature,
    coprime_pairs,
    d_via_gap_count,
    d_via_signature,
    gap_count_identity_check,
    inequality_suite,
    levine_tristram,
    mu_plus,
    spectrum,
    tilde_c,
)

SWEEP = list(coprime_pairs(10, 13))


def test_spectrum_frozen():
    sp = spectrum(CoprimePair(2, 3))
    assert sp.numerators == (5, 7)
    assert sp.elements == (Fraction(5, 6), Fraction(7, 6))
    sp = spectrum(CoprimePair(4, 5))
    assert sp.numerators == (9, 13, 14, 17, 18, 19, 21, 22, 23, 26, 27, 31)
    assert sp.count_ge(30) == 1
    assert sp.contains_numerator(21) and not sp.contains_numerator(20)


@pytest.mark.parametrize("pair", SWEEP, ids=str)
def test_spectrum_symmetry(pair):
    sp = spectrum(pair)
    pq = pair.product
    assert len(sp.numerators) == 2 * pair.delta
    assert tuple(sorted(2 * pq - n for n in sp.numerators)) == sp.numerators
    assert not sp.contains_numerator(pq)  # 1 itself is never a spectrum point


def naive_report(pair, a):
    # same four-arc counts, through exact Fractions instead of bisects
    pq = pair.product
    x = Fraction(a, pq)
    pts = spectrum(pair).elements
    s1 = sum(1 for t in pts if 0 < t <= x)
    s2 = sum(1 for t in pts if x < t < 1)
    s3 = sum(1 for t in pts if 1 < t < 1 + x)
    s4 = sum(1 for t in pts if t >= 1 + x)
    hits = sum(1 for t in pts if t in (x, 1 + x))
    return s1, s2, s3, s4, hits


@pytest.mark.parametrize("pair", SWEEP, ids=str)
def test_levine_tristram_matches_fraction_counts(pair):
    for a in range(pair.product):
        rep = levine_tristram(pair, a)
        assert (rep.s1, rep.s2, rep.s3, rep.s4) == naive_report(pair, a)[:4]
        assert rep.boundary_hits == naive_report(pair, a)[4]
        assert rep.sigma == rep.s1 + rep.s4 - rep.s2 - rep.s3 + rep.boundary_hits
        assert rep.s1 + rep.s2 == rep.s3 + rep.s4 == pair.delta
        # parity of sigma is the parity of the boundary hits
        assert rep.sigma % 2 == rep.boundary_hits % 2


def test_levine_tristram_frozen_values():
    assert levine_tristram(CoprimePair(2, 3), 0).sigma == 0
    assert levine_tristram(CoprimePair(2, 3), 1).sigma == 1
    assert levine_tristram(CoprimePair(2, 3), 2).sigma == -2
    rep = levine_tristram(CoprimePair(4, 5), 6)
    assert (rep.s1, rep.s2, rep.s3, rep.s4) == (0, 6, 3, 3)
    assert rep.boundary_hits == 1 and rep.sigma == -5


def test_levine_tristram_domain():
    with pytest.raises(ValueError):
        levine_tristram(CoprimePair(2, 3), -1)
    with pytest.raises(ValueError):
        levine_tristram(CoprimePair(2, 3), 6)


def test_tilde_c_frozen():
    # 7/6 is a spectrum point of T(2, 3), 5/6 is the mirror hit
    assert tilde_c(CoprimePair(2, 3), 1) == Fraction(1, 2)
    assert tilde_c(CoprimePair(2, 3), 5) == Fraction(-1, 2)
    assert tilde_c(CoprimePair(2, 3), 2) == 0


@pytest.mark.parametrize("pair", SWEEP, ids=str)
def test_tilde_c_consistent_with_hits(pair):
    sp = spectrum(pair)
    pq = pair.product
    for a in range(pq):
        c = tilde_c(pair, a)
        if sp.contains_numerator(pq + a):
            assert c == Fraction(1, 2)
        elif sp.contains_numerator(a):
            assert c == Fraction(-1, 2)
        else:
            assert c == 0


def test_classical_signature_known_families():
    # sigma(T(2, 2k+1)) = -2k
    for k in range(1, 9):
        assert classical_signature(CoprimePair(2, 2 * k + 1)) == -2 * k
    assert classical_signature(CoprimePair(3, 4)) == -6
    assert classical_signature(CoprimePair(3, 5)) == -8
    assert classical_signature(CoprimePair(3, 7)) == -8
    assert classical_signature(CoprimePair(4, 5)) == -8
    assert mu_plus(CoprimePair(4, 5)) == 2


@pytest.mark.parametrize("pair", SWEEP, ids=str)
def test_classical_signature_is_half_twist_value(pair):
    # for even pq the jump formula at a = pq/2 must reproduce the classical
    # signature; pq/2 is never a spectrum numerator, so no boundary term
    pq = pair.product
    if pq % 2:
        return
    rep = levine_tristram(pair, pq // 2)
    assert rep.boundary_hits == 0
    assert rep.sigma == classical_signature(pair)


@pytest.mark.parametrize("pair", SWEEP, ids=str)
def test_gap_count_identity_all_arguments(pair):
    for a in range(pair.product):
        assert gap_count_identity_check(pair, a)


def test_d_via_signature_frozen():
    assert d_via_signature(CoprimePair(2, 3)) == -2
    assert d_via_signature(CoprimePair(3, 4)) == -2
    assert d_via_signature(CoprimePair(4, 5)) == -6


@pytest.mark.parametrize("pair", SWEEP, ids=str)
def test_d_via_signature_matches_gap_count(pair):
    assert d_via_signature(pair) == d_via_gap_count(pair)


@pytest.mark.parametrize("pair", list(coprime_pairs(16, 16)), ids=str)
def test_inequality_suite_sweep(pair):
    rep = inequality_suite(pair)
    assert rep.all_required_hold, rep.required
    assert rep.equalities["gap_tail_sharp"] == rep.equalities["expected_gap_tail_sharp"]
    assert rep.equalities["sigma_sharp"] == rep.equalities["expected_sigma_sharp"]


def test_alternating_bound_fails_first_at_4_5():
    # -d <= 2 ceil(-sigma/4) holds for thinner pairs but not for (4, 5)
    rep = inequality_suite(CoprimePair(4, 5))
    assert rep.d == -6 and rep.alternating_bound_rhs == 4
    assert not rep.alternating_bound_holds
    for p, q in [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5)]:
        assert inequality_suite(CoprimePair(p, q)).alternating_bound_holds
