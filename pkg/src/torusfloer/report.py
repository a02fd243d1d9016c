"""Full invariant reports: every route computed, every agreement enforced.

build_report is the single entry point the service and CLI share.  It refuses
to emit a report whose internal cross-checks fail: the four correction-term
routes, the plumbing evaluation of K^2 + s against its closed form, the tower
data against the Alexander expansion, and the staircase duality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .floer import (
    CrossCheckError,
    DualityReport,
    HFDecomposition,
    casson_minus_one,
    casson_plus_one,
    duality_check,
    grading_identity_holds,
    hf_minus_one,
    hf_plus_one,
    tau_minus_one_profile,
)
from .seifert import (
    SeifertData,
    TauProfile,
    d_via_dedekind,
    d_via_gap_count,
    d_via_tau,
    k2_plus_s,
    plus_one_surgery,
    tau_profile,
)
from .semigroup import CoprimePair, build_semigroup
from .signature import (
    InequalityReport,
    classical_signature,
    d_via_signature,
    inequality_suite,
    levine_tristram,
    mu_plus,
    tilde_c,
)

ROUTES = ("tau", "dedekind", "gap_count", "signature")


@dataclass(frozen=True)
class InvariantReport:
    """Everything the artifact knows about unit surgeries on one torus knot."""

    pair: CoprimePair
    delta: int
    gaps: tuple[int, ...]
    alpha: tuple[int, ...]
    d: int
    d_routes: dict[str, int]
    seifert_plus: SeifertData
    hf_plus: HFDecomposition
    hf_minus: HFDecomposition
    tau_plus: TauProfile
    tau_minus: TauProfile
    duality: DualityReport
    casson_plus: int
    casson_minus: int
    sigma_classical: int
    mu_plus: int
    sigma_at_delta: int
    tilde_c_at_delta: Fraction
    k2s_plus: int
    k2s_minus: int
    inequalities: InequalityReport


def build_report(pair: CoprimePair) -> InvariantReport:
    """Compute all invariants of S^3_{+1} and S^3_{-1} on T(p, q), cross-checked."""
    sg = build_semigroup(pair)
    dl = sg.delta
    routes = {
        "tau": d_via_tau(pair),
        "dedekind": d_via_dedekind(pair),
        "gap_count": d_via_gap_count(pair),
        "signature": d_via_signature(pair),
    }
    if len(set(routes.values())) != 1:
        raise CrossCheckError(f"correction term routes disagree for {pair}: {routes}")
    d = routes["gap_count"]

    sd = plus_one_surgery(pair)
    k2s_plus = -4 * dl * (dl - 3)
    if k2_plus_s(sd) != k2s_plus:
        raise CrossCheckError(f"K^2 + s plumbing evaluation disagrees for {pair}")
    k2s_minus = -4 * dl * (dl - 1)

    hfp = hf_plus_one(pair)
    hfm = hf_minus_one(pair)
    if hfp.d != d:
        raise CrossCheckError(f"tower correction term disagrees for {pair}")
    if not grading_identity_holds(pair):
        raise CrossCheckError(f"tower gradings disagree with the staircase for {pair}")
    dual = duality_check(pair)

    rep_delta = levine_tristram(pair, dl)
    return InvariantReport(
        pair=pair,
        delta=dl,
        gaps=sg.gaps,
        alpha=sg.alpha,
        d=d,
        d_routes=routes,
        seifert_plus=sd,
        hf_plus=hfp,
        hf_minus=hfm,
        tau_plus=tau_profile(pair),
        tau_minus=tau_minus_one_profile(pair),
        duality=dual,
        casson_plus=casson_plus_one(pair),
        casson_minus=casson_minus_one(pair),
        sigma_classical=classical_signature(pair),
        mu_plus=mu_plus(pair),
        sigma_at_delta=rep_delta.sigma,
        tilde_c_at_delta=tilde_c(pair, dl),
        k2s_plus=k2s_plus,
        k2s_minus=k2s_minus,
        inequalities=inequality_suite(pair),
    )


def _join(values) -> str:
    return " ".join(str(v) for v in values)


COLUMNS = {
    "delta": lambda r: r.delta,
    "d": lambda r: r.d,
    "d_tau": lambda r: r.d_routes["tau"],
    "d_dedekind": lambda r: r.d_routes["dedekind"],
    "d_gap_count": lambda r: r.d_routes["gap_count"],
    "d_signature": lambda r: r.d_routes["signature"],
    "sigma": lambda r: r.sigma_classical,
    "mu_plus": lambda r: r.mu_plus,
    "casson_plus": lambda r: r.casson_plus,
    "casson_minus": lambda r: r.casson_minus,
    "rank_plus": lambda r: r.hf_plus.rank_reduced,
    "rank_minus": lambda r: r.hf_minus.rank_reduced,
    "tau_min_plus": lambda r: r.tau_plus.global_min,
    "tau_min_minus": lambda r: r.tau_minus.global_min,
    "k2s_plus": lambda r: r.k2s_plus,
    "k2s_minus": lambda r: r.k2s_minus,
    "gaps": lambda r: _join(r.gaps),
    "alpha": lambda r: _join(r.alpha),
}

DEFAULT_COLUMNS = ("delta", "d", "sigma")


def coprime_pairs(p_max: int, q_max: int):
    """All CoprimePair(p, q) with 2 <= p <= p_max and p < q <= q_max."""
    for p in range(2, p_max + 1):
        for q in range(p + 1, q_max + 1):
            if math.gcd(p, q) == 1:
                yield CoprimePair(p, q)


def table_rows(p_max: int, q_max: int, columns=DEFAULT_COLUMNS):
    """Header and rows for every coprime pair in range, in (p, q) order."""
    unknown = [c for c in columns if c not in COLUMNS]
    if unknown:
        raise ValueError(f"unknown columns: {', '.join(unknown)}")
    header = ["p", "q", *columns]
    rows = []
    for pair in coprime_pairs(p_max, q_max):
        rep = build_report(pair)
        rows.append([pair.p, pair.q, *(COLUMNS[c](rep) for c in columns)])
    return header, rows
