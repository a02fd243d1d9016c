"""Command line client.  All mathematics lives in the library; this module
only parses arguments, renders, and maps failures to exit codes:
0 success, 1 verification or cross-check failure, 2 usage error.

With --server URL the subcommands proxy to a running service instead of
computing in process; `torusfloer serve` starts that service.
"""

from __future__ import annotations

import argparse
import json
import sys
import urllib.error
import urllib.parse
import urllib.request

from .floer import CrossCheckError
from .report import COLUMNS, DEFAULT_COLUMNS, build_report, table_rows
from .schemas import (
    diagram_csv,
    hf_model,
    report_model,
    report_text,
    table_csv,
    to_json,
    towers_dot,
)
from .semigroup import CoprimePair
from .verify import DEFAULT_SUITES, SUITES, run_suites

MAX_PRODUCT_DEFAULT = 10**6


class UsageError(Exception):
    pass


def _pair(args) -> CoprimePair:
    try:
        pair = CoprimePair(args.p, args.q)
    except ValueError as exc:
        raise UsageError(str(exc))
    if pair.product > args.max_product:
        raise UsageError(f"p*q = {pair.product} exceeds the ceiling {args.max_product}")
    return pair


def _fetch(server: str, path: str, params: dict | None = None) -> str:
    url = server.rstrip("/") + path
    if params:
        url += "?" + urllib.parse.urlencode(params)
    try:
        with urllib.request.urlopen(url) as resp:
            return resp.read().decode()
    except urllib.error.HTTPError as exc:
        body = exc.read().decode(errors="replace")
        raise UsageError(f"server returned {exc.code}: {body}")


def cmd_compute(args) -> int:
    pair = _pair(args)
    if args.server:
        # The service speaks JSON; canonicalize it regardless of --format.
        body = _fetch(args.server, f"/compute/{pair.p}/{pair.q}")
        sys.stdout.write(json.dumps(json.loads(body), sort_keys=True, indent=2) + "\n")
        return 0
    rep = build_report(pair)
    if args.format == "json":
        sys.stdout.write(to_json(report_model(rep)))
    else:
        sys.stdout.write(report_text(rep))
    return 0


def cmd_table(args) -> int:
    columns = (
        [c for c in args.columns.split(",") if c] if args.columns else list(DEFAULT_COLUMNS)
    )
    unknown = [c for c in columns if c not in COLUMNS]
    if unknown:
        raise UsageError(
            f"unknown columns: {', '.join(unknown)} (available: {', '.join(COLUMNS)})"
        )
    if args.p_max * args.q_max > args.max_product:
        raise UsageError("table range exceeds the product ceiling")
    if args.server:
        body = _fetch(
            args.server,
            "/table",
            {"p_max": args.p_max, "q_max": args.q_max, "columns": ",".join(columns)},
        )
        data = json.loads(body)
        header, rows = data["header"], data["rows"]
    else:
        header, rows = table_rows(args.p_max, args.q_max, columns)
    if args.format == "json":
        sys.stdout.write(
            json.dumps({"header": header, "rows": rows}, sort_keys=True, indent=2) + "\n"
        )
    else:
        sys.stdout.write(table_csv(header, rows))
    return 0


def cmd_verify(args) -> int:
    names = [s for s in args.suites.split(",") if s] if args.suites else list(DEFAULT_SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise UsageError(
            f"unknown suites: {', '.join(unknown)} (available: {', '.join(SUITES)})"
        )
    if args.server:
        body = _fetch(
            args.server,
            "/verify",
            {"p_max": args.p_max, "q_max": args.q_max, "suites": ",".join(names)},
        )
        data = json.loads(body)
        suites = data["suites"]
        all_passed = data["passed"]
        for s in suites:
            _print_suite(s["name"], s["checks"], s["failures"])
    else:
        results = run_suites(args.p_max, args.q_max, names)
        all_passed = all(r.passed for r in results)
        for r in results:
            _print_suite(r.name, r.checks, r.failures)
    return 0 if all_passed else 1


def _print_suite(name: str, checks: int, failures: list[str]) -> None:
    if not failures:
        print(f"{name}: PASS ({checks} checks)")
    else:
        print(f"{name}: FAIL ({len(failures)} of {checks} checks)")
        for detail in failures[:10]:
            print(f"  {detail}")


def cmd_diagram(args) -> int:
    pair = _pair(args)
    if args.server:
        body = _fetch(
            args.server,
            f"/diagram/{pair.p}/{pair.q}",
            {"which": args.which, "format": args.format},
        )
        sys.stdout.write(body)
        return 0
    if args.format == "dot":
        from .floer import hf_minus_one, hf_plus_one

        hfs = []
        if args.which in ("plus", "both"):
            hfs.append(("plus", hf_model(hf_plus_one(pair))))
        if args.which in ("minus", "both"):
            hfs.append(("minus", hf_model(hf_minus_one(pair))))
        sys.stdout.write(towers_dot(hfs))
    else:
        from .service import diagram_parts

        sys.stdout.write(diagram_csv(diagram_parts(pair, args.which)))
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("torusfloer.service:app", host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torusfloer",
        description="Exact Floer, Casson, and signature invariants of unit surgeries on torus knots",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_server(p):
        p.add_argument("--server", help="proxy to a running service at this base URL")

    p = sub.add_parser("compute", help="full invariant report for one pair")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--max-product", type=int, default=MAX_PRODUCT_DEFAULT)
    add_server(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table", help="reports for all pairs in range, as CSV or JSON")
    p.add_argument("p_max", type=int)
    p.add_argument("q_max", type=int)
    p.add_argument("--columns", help="comma-separated column names")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--max-product", type=int, default=MAX_PRODUCT_DEFAULT)
    add_server(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run verification sweeps up to the given bounds")
    p.add_argument("p_max", type=int)
    p.add_argument("q_max", type=int)
    p.add_argument("--suites", help="comma-separated suite names")
    add_server(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("diagram", help="sawtooth corners as CSV or towers as DOT")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--which", choices=("plus", "minus", "both"), default="both")
    p.add_argument("--format", choices=("csv", "dot"), default="csv")
    p.add_argument("--max-product", type=int, default=MAX_PRODUCT_DEFAULT)
    add_server(p)
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CrossCheckError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
