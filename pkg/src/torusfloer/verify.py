"""Verification sweeps.  Each suite recomputes a family of identities from
scratch along independent routes and reports every failure it finds; nothing
is sampled, every case in range is checked."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .floer import CrossCheckError, duality_check, grading_identity_holds
from .numtheory import (
    dedekind_sum,
    dedekind_sum_general,
    mod_inverse_neg,
    sawtooth,
    sawtooth_partial_sum,
)
from .report import coprime_pairs
from .seifert import (
    d_via_dedekind,
    d_via_gap_count,
    d_via_tau,
    k2_plus_s,
    plus_one_surgery,
    tau_compact,
    tau_direct_values,
    tau_profile,
)
from .semigroup import build_semigroup, count_gaps_ge
from .signature import d_via_signature, gap_count_identity_check, inequality_suite


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, detail: str):
        self.checks += 1
        if not ok:
            self.failures.append(detail)


def suite_d_agreement(p_max: int, q_max: int) -> SuiteResult:
    """Four correction-term routes agree, and the plumbing K^2 + s evaluation
    matches its closed form, for every pair in range."""
    res = SuiteResult("d-agreement")
    for pair in coprime_pairs(p_max, q_max):
        routes = {
            "tau": d_via_tau(pair),
            "dedekind": d_via_dedekind(pair),
            "gap_count": d_via_gap_count(pair),
            "signature": d_via_signature(pair),
        }
        res.check(len(set(routes.values())) == 1, f"{pair}: {routes}")
        dl = pair.delta
        res.check(
            k2_plus_s(plus_one_surgery(pair)) == -4 * dl * (dl - 3),
            f"{pair}: K^2 + s closed form",
        )
    return res


def suite_tau_oracle(p_max: int, q_max: int) -> SuiteResult:
    """Closed-form tau equals the defining sum at every m in [0, 2*delta*pq]."""
    res = SuiteResult("tau-oracle")
    for pair in coprime_pairs(p_max, q_max):
        sd = plus_one_surgery(pair)
        m_max = 2 * pair.delta * pair.product
        vals = tau_direct_values(sd, m_max)
        bad = [m for m in range(m_max + 1) if tau_compact(sd, m) != vals[m]]
        res.check(not bad, f"{pair}: closed form off at m={bad[:5]}")
    return res


def suite_extrema(p_max: int, q_max: int) -> SuiteResult:
    """Brute-force staircase confirms the +1 surgery extremum structure:
    positions, values, difference identities, step ranges, and the tail."""
    res = SuiteResult("extrema")
    for pair in coprime_pairs(p_max, q_max):
        sg = build_semigroup(pair)
        dl = sg.delta
        pq = pair.product
        prof = tau_profile(pair)
        sd = plus_one_surgery(pair)
        end = (2 * dl + 1) * pq + 2
        vals = tau_direct_values(sd, end)
        mins = prof.minima_positions
        maxs = prof.maxima_positions
        res.check(
            all(vals[mp] == mv for mp, mv in zip(mins, prof.minima_values)),
            f"{pair}: minima values",
        )
        res.check(
            all(vals[mp] == mv for mp, mv in zip(maxs, prof.maxima_values)),
            f"{pair}: maxima values",
        )
        ok_diff = True
        for n in range(2 * dl - 2):
            if prof.maxima_values[n] - prof.minima_values[n + 1] != sg.alpha[n + 1]:
                ok_diff = False
            members_le_n = (n + 1) - (dl - count_gaps_ge(sg, n + 1))
            if prof.maxima_values[n] - prof.minima_values[n] != members_le_n:
                ok_diff = False
        res.check(ok_diff, f"{pair}: extremum difference identities")
        ok_steps = True
        for n in range(2 * dl - 2):
            for j in range(mins[n], maxs[n]):
                if vals[j + 1] - vals[j] not in (0, 1):
                    ok_steps = False
            for j in range(maxs[n], mins[n + 1]):
                if vals[j + 1] - vals[j] not in (0, -1):
                    ok_steps = False
        res.check(ok_steps, f"{pair}: step increments out of range")
        res.check(
            min(vals) == prof.global_min
            and vals[prof.global_min_position] == prof.global_min,
            f"{pair}: global minimum",
        )
        tail_start = (2 * dl - 2) * pq + 1
        res.check(
            all(vals[j + 1] - vals[j] >= 0 for j in range(mins[-1], tail_start))
            and all(vals[j + 1] - vals[j] >= 0 for j in range(tail_start, end - 1)),
            f"{pair}: non-decreasing tail",
        )
    return res


def suite_gap_bridge(p_max: int, q_max: int) -> SuiteResult:
    """Gap count / spectrum / signature bridges at every a in [0, pq)."""
    res = SuiteResult("gap-bridge")
    for pair in coprime_pairs(p_max, q_max):
        bad = [a for a in range(pair.product) if not gap_count_identity_check(pair, a)]
        res.check(not bad, f"{pair}: identity fails at a={bad[:5]}")
    return res


def suite_duality(p_max: int, q_max: int) -> SuiteResult:
    """Staircase duality for both surgeries on every pair in range."""
    res = SuiteResult("duality")
    for pair in coprime_pairs(p_max, q_max):
        try:
            duality_check(pair)
            res.check(grading_identity_holds(pair), f"{pair}: grading identity")
        except CrossCheckError as exc:
            res.check(False, str(exc))
    return res


def suite_inequalities(p_max: int, q_max: int) -> SuiteResult:
    """All required bounds hold, sharpness appears exactly where predicted,
    and the alternating-pattern bound fails where it should."""
    res = SuiteResult("inequalities")
    for pair in coprime_pairs(p_max, q_max):
        rep = inequality_suite(pair)
        bad = [name for name, ok in rep.required.items() if not ok]
        res.check(not bad, f"{pair}: {bad}")
        res.check(
            rep.equalities["gap_tail_sharp"] == rep.equalities["expected_gap_tail_sharp"],
            f"{pair}: gap tail sharpness",
        )
        res.check(
            rep.equalities["sigma_sharp"] == rep.equalities["expected_sigma_sharp"],
            f"{pair}: sigma sharpness",
        )
        if (pair.p, pair.q) == (4, 5):
            res.check(
                not rep.alternating_bound_holds,
                "(4, 5) should violate the alternating-pattern bound",
            )
    return res


def suite_reciprocity(
    reciprocity_limit: int = 200,
    vanishing_limit: int = 60,
    partial_b_max: int = 50,
    inverse_limit: int = 50,
) -> SuiteResult:
    """Dedekind-sum infrastructure: reciprocity, full-period vanishing, the
    partial-sum closed form, and the inverse-argument symmetry."""
    res = SuiteResult("reciprocity")
    bad = []
    for q in range(1, reciprocity_limit + 1):
        for p in range(1, q + 1):
            if math.gcd(p, q) != 1:
                continue
            lhs = dedekind_sum(p, q) + dedekind_sum(q, p)
            rhs = Fraction(p * p + q * q + 1 - 3 * p * q, 12 * p * q)
            if lhs != rhs:
                bad.append((p, q))
    res.check(not bad, f"reciprocity fails at {bad[:5]}")
    bad = []
    for b in range(1, vanishing_limit + 1):
        for a in range(1, b + 1):
            if math.gcd(a, b) != 1:
                continue
            if sum(sawtooth(Fraction(j * a, b)) for j in range(b)) != 0:
                bad.append((a, b))
    res.check(not bad, f"full-period sum fails at {bad[:5]}")
    bad = []
    for b in range(1, partial_b_max + 1):
        for a in range(1, b + 1):
            if math.gcd(a, b) != 1:
                continue
            running = Fraction(0)
            for m in range(3 * b + 1):
                if sawtooth_partial_sum(a, b, m) != running:
                    bad.append((a, b, m))
                running += sawtooth(Fraction(m * a, b))
    res.check(not bad, f"partial-sum closed form fails at {bad[:5]}")
    bad = []
    for pair in coprime_pairs(inverse_limit, inverse_limit):
        p, q = pair.p, pair.q
        if dedekind_sum(pow(q, -1, p), p) != dedekind_sum(q, p):
            bad.append((p, q))
        if dedekind_sum(pow(p, -1, q), q) != dedekind_sum(p, q):
            bad.append((q, p))
    res.check(not bad, f"inverse-argument symmetry fails at {bad[:5]}")
    return res


SUITES = {
    "d-agreement": suite_d_agreement,
    "tau-oracle": suite_tau_oracle,
    "extrema": suite_extrema,
    "gap-bridge": suite_gap_bridge,
    "duality": suite_duality,
    "inequalities": suite_inequalities,
    "reciprocity": lambda p_max, q_max: suite_reciprocity(
        reciprocity_limit=q_max,
        vanishing_limit=min(q_max, 60),
        partial_b_max=min(q_max, 50),
        inverse_limit=min(q_max, 50),
    ),
}

DEFAULT_SUITES = tuple(SUITES)


def run_suites(p_max: int, q_max: int, names=DEFAULT_SUITES) -> list[SuiteResult]:
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites: {', '.join(unknown)}")
    return [SUITES[name](p_max, q_max) for name in names]
