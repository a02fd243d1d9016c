"""HTTP face of the library.  Stateless: every endpoint recomputes from its
arguments, so responses are deterministic and cacheable."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Query
from fastapi.responses import PlainTextResponse

from . import __version__
from .floer import CrossCheckError, hf_minus_one, hf_plus_one, sawtooth_from_sequence
from .report import DEFAULT_COLUMNS, build_report, table_rows
from .schemas import (
    DiagramModel,
    ReportModel,
    SuiteModel,
    TableModel,
    VerifyModel,
    diagram_csv,
    hf_model,
    report_model,
    towers_dot,
)
from .semigroup import CoprimePair, build_semigroup
from .verify import DEFAULT_SUITES, run_suites

MAX_PRODUCT_DEFAULT = 10**6

app = FastAPI(
    title="torusfloer",
    version=__version__,
    description="Exact Floer, Casson, and signature invariants of unit surgeries on torus knots.",
)


def _pair(p: int, q: int, max_product: int = MAX_PRODUCT_DEFAULT) -> CoprimePair:
    try:
        pair = CoprimePair(p, q)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    if pair.product > max_product:
        raise HTTPException(
            status_code=422,
            detail=f"p*q = {pair.product} exceeds the ceiling {max_product}",
        )
    return pair


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.get("/compute/{p}/{q}", response_model=ReportModel)
def compute(p: int, q: int, max_product: int = Query(MAX_PRODUCT_DEFAULT, ge=6)) -> ReportModel:
    pair = _pair(p, q, max_product)
    try:
        return report_model(build_report(pair))
    except CrossCheckError as exc:
        raise HTTPException(status_code=500, detail=f"cross-check failure: {exc}")


@app.get("/table", response_model=TableModel)
def table(
    p_max: int = Query(..., ge=2),
    q_max: int = Query(..., ge=2),
    columns: str = Query(",".join(DEFAULT_COLUMNS)),
    max_product: int = Query(MAX_PRODUCT_DEFAULT, ge=6),
) -> TableModel:
    if p_max * q_max > max_product:
        raise HTTPException(status_code=422, detail="table range exceeds the product ceiling")
    names = [c for c in columns.split(",") if c]
    try:
        header, rows = table_rows(p_max, q_max, names)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    except CrossCheckError as exc:
        raise HTTPException(status_code=500, detail=f"cross-check failure: {exc}")
    return TableModel(header=header, rows=rows)


@app.get("/verify", response_model=VerifyModel)
def verify(
    p_max: int = Query(..., ge=2),
    q_max: int = Query(..., ge=2),
    suites: str = Query(",".join(DEFAULT_SUITES)),
) -> VerifyModel:
    names = [s for s in suites.split(",") if s]
    try:
        results = run_suites(p_max, q_max, names)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    models = [
        SuiteModel(name=r.name, checks=r.checks, failures=r.failures, passed=r.passed)
        for r in results
    ]
    return VerifyModel(passed=all(r.passed for r in results), suites=models)


def diagram_parts(pair: CoprimePair, which: str) -> list[DiagramModel]:
    sg = build_semigroup(pair)
    parts = []
    if which in ("minus", "both"):
        diag = sawtooth_from_sequence(sg.alpha)
        parts.append(
            DiagramModel(surgery="minus", teeth=list(diag.teeth), corners=list(diag.corners))
        )
    if which in ("plus", "both"):
        diag = sawtooth_from_sequence(sg.alpha[1:])
        parts.append(
            DiagramModel(surgery="plus", teeth=list(diag.teeth), corners=list(diag.corners))
        )
    return parts


@app.get("/diagram/{p}/{q}")
def diagram(
    p: int,
    q: int,
    which: str = Query("both", pattern="^(plus|minus|both)$"),
    format: str = Query("csv", pattern="^(csv|dot|json)$"),
):
    pair = _pair(p, q)
    if format == "dot":
        hfs = []
        if which in ("plus", "both"):
            hfs.append(("plus", hf_model(hf_plus_one(pair))))
        if which in ("minus", "both"):
            hfs.append(("minus", hf_model(hf_minus_one(pair))))
        return PlainTextResponse(towers_dot(hfs))
    parts = diagram_parts(pair, which)
    if format == "json":
        return parts
    return PlainTextResponse(diagram_csv(parts), media_type="text/csv")
