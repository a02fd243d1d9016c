"""Wire schemas and renderers.  Exact rationals travel as "n/d" strings, tower
lengths as integers or the literal "infinite", and every renderer is
deterministic: identical inputs give byte-identical output."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Literal, Union

from pydantic import BaseModel

from .floer import HFDecomposition, Tower
from .report import InvariantReport
from .seifert import TauProfile


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


class PairModel(BaseModel):
    p: int
    q: int


class TowerModel(BaseModel):
    grading: int
    length: Union[int, Literal["infinite"]]
    multiplicity: int


class HFModel(BaseModel):
    d: int
    towers: list[TowerModel]
    rank_reduced: int
    casson: int


class TauModel(BaseModel):
    minima_values: list[int]
    maxima_values: list[int]
    minima_positions: list[int] | None
    maxima_positions: list[int] | None
    global_min: int
    global_min_index: int
    global_min_position: int | None


class SeifertModel(BaseModel):
    e0: int
    arms: list[tuple[int, int]]
    euler: str
    epsilon: str


class InvariantsModel(BaseModel):
    delta: int
    gaps: list[int]
    alpha: list[int]
    d: int
    casson_plus: int
    casson_minus: int
    sigma_classical: int
    mu_plus: int
    sigma_at_delta: int
    tilde_c_at_delta: str
    k2s_plus: int
    k2s_minus: int


class DRoutesModel(BaseModel):
    tau: int
    dedekind: int
    gap_count: int
    signature: int


class HFPairModel(BaseModel):
    plus: HFModel
    minus: HFModel


class TauPairModel(BaseModel):
    plus: TauModel
    minus: TauModel


class InequalitiesModel(BaseModel):
    required: dict[str, bool]
    equalities: dict[str, bool]
    alternating_bound_holds: bool
    alternating_bound_rhs: int


class ReportModel(BaseModel):
    pair: PairModel
    invariants: InvariantsModel
    d_routes: DRoutesModel
    seifert_plus: SeifertModel
    hf: HFPairModel
    tau: TauPairModel
    inequalities: InequalitiesModel


class TableModel(BaseModel):
    header: list[str]
    rows: list[list[Union[int, str]]]


class SuiteModel(BaseModel):
    name: str
    checks: int
    failures: list[str]
    passed: bool


class VerifyModel(BaseModel):
    passed: bool
    suites: list[SuiteModel]


class DiagramModel(BaseModel):
    surgery: Literal["plus", "minus"]
    teeth: list[int]
    corners: list[int]


def tower_model(t: Tower) -> TowerModel:
    return TowerModel(
        grading=t.grading,
        length="infinite" if t.length is None else t.length,
        multiplicity=t.multiplicity,
    )


def hf_model(hf: HFDecomposition) -> HFModel:
    return HFModel(
        d=hf.d,
        towers=[tower_model(t) for t in hf.towers],
        rank_reduced=hf.rank_reduced,
        casson=hf.casson,
    )


def tau_model(prof: TauProfile) -> TauModel:
    return TauModel(
        minima_values=list(prof.minima_values),
        maxima_values=list(prof.maxima_values),
        minima_positions=None if prof.minima_positions is None else list(prof.minima_positions),
        maxima_positions=None if prof.maxima_positions is None else list(prof.maxima_positions),
        global_min=prof.global_min,
        global_min_index=prof.global_min_index,
        global_min_position=prof.global_min_position,
    )


def report_model(rep: InvariantReport) -> ReportModel:
    return ReportModel(
        pair=PairModel(p=rep.pair.p, q=rep.pair.q),
        invariants=InvariantsModel(
            delta=rep.delta,
            gaps=list(rep.gaps),
            alpha=list(rep.alpha),
            d=rep.d,
            casson_plus=rep.casson_plus,
            casson_minus=rep.casson_minus,
            sigma_classical=rep.sigma_classical,
            mu_plus=rep.mu_plus,
            sigma_at_delta=rep.sigma_at_delta,
            tilde_c_at_delta=fraction_str(rep.tilde_c_at_delta),
            k2s_plus=rep.k2s_plus,
            k2s_minus=rep.k2s_minus,
        ),
        d_routes=DRoutesModel(**rep.d_routes),
        seifert_plus=SeifertModel(
            e0=rep.seifert_plus.e0,
            arms=list(rep.seifert_plus.arms),
            euler=fraction_str(rep.seifert_plus.e),
            epsilon=fraction_str(rep.seifert_plus.epsilon),
        ),
        hf=HFPairModel(plus=hf_model(rep.hf_plus), minus=hf_model(rep.hf_minus)),
        tau=TauPairModel(plus=tau_model(rep.tau_plus), minus=tau_model(rep.tau_minus)),
        inequalities=InequalitiesModel(
            required=dict(rep.inequalities.required),
            equalities=dict(rep.inequalities.equalities),
            alternating_bound_holds=rep.inequalities.alternating_bound_holds,
            alternating_bound_rhs=rep.inequalities.alternating_bound_rhs,
        ),
    )


def to_json(model: BaseModel) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(model.model_dump(mode="json"), sort_keys=True, indent=2) + "\n"


def table_csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def tower_label(t: TowerModel) -> str:
    length = "inf" if t.length == "infinite" else t.length
    return f"T_{{{t.grading}}}({length})^{t.multiplicity}"


def towers_dot(parts: list[tuple[str, HFModel]]) -> str:
    """DOT graph of tower structures, one cluster per surgery."""
    lines = ["digraph towers {", "  rankdir=LR;", "  node [shape=box];"]
    for name, hf in parts:
        lines.append(f"  subgraph cluster_{name} {{")
        lines.append(f'    label="{name}";')
        for i, t in enumerate(hf.towers):
            lines.append(f'    {name}_{i} [label="{tower_label(t)}"];')
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def diagram_csv(parts: list[DiagramModel]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["surgery", "position", "value"])
    for part in parts:
        for pos, val in enumerate(part.corners):
            writer.writerow([part.surgery, pos, val])
    return buf.getvalue()


def _fmt_tower(t: Tower) -> str:
    if t.length is None:
        return f"T+({t.grading})"
    body = f"T_{t.grading}({t.length})"
    return body if t.multiplicity == 1 else f"{body}x{t.multiplicity}"


def report_text(rep: InvariantReport) -> str:
    """Human-readable block layout of a full report."""
    routes = rep.d_routes
    lines = [
        f"pair: T({rep.pair.p},{rep.pair.q})",
        f"delta: {rep.delta}",
        f"gaps: {' '.join(map(str, rep.gaps))}",
        f"alpha: {' '.join(map(str, rep.alpha))}",
        f"d: {rep.d}",
        "d routes: "
        + " ".join(f"{name}={routes[name]}" for name in ("tau", "dedekind", "gap_count", "signature")),
        f"sigma: {rep.sigma_classical}",
        f"mu_plus: {rep.mu_plus}",
        f"casson(+1): {rep.casson_plus}",
        f"casson(-1): {rep.casson_minus}",
        f"K2+s(+1): {rep.k2s_plus}",
        f"K2+s(-1): {rep.k2s_minus}",
        "HF+(+1): " + " + ".join(_fmt_tower(t) for t in rep.hf_plus.towers),
        "HF+(-1): " + " + ".join(_fmt_tower(t) for t in rep.hf_minus.towers),
        f"rank HF_red(+1): {rep.hf_plus.rank_reduced}",
        f"rank HF_red(-1): {rep.hf_minus.rank_reduced}",
        f"tau(+1) minima: {' '.join(map(str, rep.tau_plus.minima_values))}",
        f"tau(+1) maxima: {' '.join(map(str, rep.tau_plus.maxima_values))}",
        f"tau(+1) min: {rep.tau_plus.global_min} at m={rep.tau_plus.global_min_position}",
        f"tau(-1) minima: {' '.join(map(str, rep.tau_minus.minima_values))}",
        f"tau(-1) maxima: {' '.join(map(str, rep.tau_minus.maxima_values))}",
        f"tau(-1) min: {rep.tau_minus.global_min}",
        f"inequalities: {'ok' if rep.inequalities.all_required_hold else 'VIOLATED'}"
        + f" (alternating bound holds: {'yes' if rep.inequalities.alternating_bound_holds else 'no'})",
    ]
    return "\n".join(lines) + "\n"
