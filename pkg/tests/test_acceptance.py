"""Acceptance sweep.  One criterion per test, one printed PASS/FAIL line per
criterion (run with -s to see them), every comparison exact.  The three wide
sweeps also assert their sixty-second budget."""

import time
from fractions import Fraction

from torusfloer import (
    CoprimePair,
    alexander,
    build_report,
    build_semigroup,
    coprime_pairs,
    duality_check,
    gap_count_identity_check,
    hf_minus_one,
    hf_plus_one,
    inequality_suite,
    k2_plus_s,
    plus_one_surgery,
    tau_profile,
)
from torusfloer.verify import (
    suite_d_agreement,
    suite_duality,
    suite_extrema,
    suite_inequalities,
    suite_reciprocity,
    suite_tau_oracle,
)

BUDGET_SECONDS = 60.0


def report_line(num, desc, ok, elapsed=None):
    status = "PASS" if ok else "FAIL"
    timing = "" if elapsed is None else f" [{elapsed:.1f}s]"
    print(f"ACCEPTANCE {num:02d} {desc}: {status}{timing}")


def run_suite(num, desc, suite, timed=False):
    t0 = time.monotonic()
    res = suite()
    elapsed = time.monotonic() - t0
    ok = res.passed and (not timed or elapsed < BUDGET_SECONDS)
    report_line(num, desc, ok, elapsed if timed else None)
    assert res.passed, res.failures[:5]
    if timed:
        assert elapsed < BUDGET_SECONDS, f"{elapsed:.1f}s over budget"


def test_criterion_01_d_route_agreement():
    run_suite(
        1,
        "four d routes agree for 2 <= p < q <= 40",
        lambda: suite_d_agreement(40, 40),
        timed=True,
    )


def test_criterion_02_tau_closed_form_oracle():
    run_suite(
        2,
        "closed-form tau equals the defining sum, q <= 12, m <= 2*delta*pq",
        lambda: suite_tau_oracle(12, 12),
        timed=True,
    )


def test_criterion_03_extremum_structure():
    run_suite(
        3,
        "staircase extremum structure, q <= 20",
        lambda: suite_extrema(20, 20),
    )


def test_criterion_04_headline_values():
    ok = True
    rep = build_report(CoprimePair(4, 5))
    ok &= -rep.d == 6 and rep.sigma_classical == -8
    # consecutive pairs: d = -floor(p/2) (floor(p/2) + 1)
    for p in range(2, 13):
        half = p // 2
        ok &= build_report(CoprimePair(p, p + 1)).d == -half * (half + 1)
    # double twist knots T(2, 2*delta+1): d = -2 ceil(delta/2)
    for dl in range(1, 13):
        rep2 = build_report(CoprimePair(2, 2 * dl + 1))
        ok &= rep2.delta == dl and rep2.d == -2 * ((dl + 1) // 2)
    rep23 = build_report(CoprimePair(2, 3))
    ok &= rep23.delta + 1 == -rep23.sigma_classical
    report_line(4, "published headline values", ok)
    assert ok


def test_criterion_05_corner_regression_3_4():
    rep = duality_check(CoprimePair(3, 4))
    ok = (
        rep.minus_corners == (0, 1, -2, -1, -3, -2, -3, -1, -2, 1, 0)
        and rep.plus_corners == (0, 1, -1, 0, -1, 0, -1, 1, 0)
        and build_semigroup(CoprimePair(3, 4)).alpha == (3, 2, 1, 1, 1)
    )
    report_line(5, "corner regression for (3,4)", ok)
    assert ok


def test_criterion_06_hf_consistency():
    ok = True
    for pair in coprime_pairs(20, 20):
        sg = build_semigroup(pair)
        dl = sg.delta
        sec = alexander(sg).second_derivative_centered
        hfp = hf_plus_one(pair)
        hfm = hf_minus_one(pair)
        finite_plus = sum(t.length * t.multiplicity for t in hfp.towers[1:])
        ok &= hfp.rank_reduced == sec // 2 - sg.alpha[dl - 1] == finite_plus
        ok &= hfm.casson == hfm.rank_reduced == sec // 2
        # tower gradings against the staircase, normalized by K^2 + s
        k2s = k2_plus_s(plus_one_surgery(pair))
        prof = tau_profile(pair)
        for k in range(-1, dl - 1):
            lhs = Fraction(k * k + k - 2 * sg.alpha[dl + k])
            ok &= lhs == 2 * prof.minima_values[dl - 2 - k] - k2s / 4
    report_line(6, "tower ranks and gradings, q <= 20", ok)
    assert ok


def test_criterion_07_gap_spectrum_bridge():
    t0 = time.monotonic()
    ok = True
    checks = 0
    for pair in coprime_pairs(15, 125):
        if pair.product > 250:
            continue
        for a in range(pair.product):
            ok &= gap_count_identity_check(pair, a)
            checks += 1
    elapsed = time.monotonic() - t0
    ok = ok and checks == 38299 and elapsed < BUDGET_SECONDS
    report_line(7, f"gap/spectrum identities, pq <= 250 ({checks} checks)", ok, elapsed)
    assert ok


def test_criterion_08_staircase_duality():
    run_suite(
        8,
        "staircase duality for both surgeries, q <= 20",
        lambda: suite_duality(20, 20),
    )


def test_criterion_09_number_theory_sweeps():
    run_suite(
        9,
        "sawtooth and Dedekind sum sweeps",
        lambda: suite_reciprocity(
            reciprocity_limit=200,
            vanishing_limit=60,
            partial_b_max=50,
            inverse_limit=50,
        ),
    )


def test_criterion_10_inequality_suite():
    def run():
        res = suite_inequalities(40, 40)
        rep = inequality_suite(CoprimePair(4, 5))
        res.check(
            rep.d == -6
            and rep.alternating_bound_rhs == 4
            and not rep.alternating_bound_holds,
            "(4,5) counterexample values",
        )
        return res

    run_suite(10, "bound suite q <= 40 with the (4,5) counterexample", run)
