"""Command-line front end: point evaluation, grid scans, table emission.

Exit codes: 0 success/pass, 1 scan violations, 2 usage or domain errors,
3 tolerance unreachable.  CSV/JSON output is byte-identical across runs
for identical flags; numbers are rounded to the requested precision and
printed in shortest round-trip form.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

from .analytic import f_at_one, f_at_one_error_bound, f_closed
from .errors import DomainError, ToleranceUnreachable, UnsupportedParameters
from .quadrature import dfdx_quad, f_quad
from .series import AnglePoint, EvalPoint, EvalResult, Tolerance, f_series, fourier_series
from .verify import (
    DEFAULT_INSET,
    Report,
    ScanGrid,
    consistency_scan,
    default_grid,
    dispatch_eval,
    identity_scan,
    inequality_scan,
    monotonicity_scan,
)

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2
EXIT_TOLERANCE = 3

TABLE_HEADER = "var,r,value,error_bound,route"


@dataclass(frozen=True)
class OutputSpec:
    format: str = "plain"
    path: str | None = None
    precision: int = 15

    def __post_init__(self) -> None:
        if self.format not in ("csv", "json", "plain"):
            raise DomainError(f"format must be csv, json, or plain, got {self.format!r}")
        if not (isinstance(self.precision, int) and 1 <= self.precision <= 17):
            raise DomainError(f"precision must be an integer in [1, 17], got {self.precision!r}")


def _fmt(v: float, precision: int) -> str:
    if isinstance(v, float) and not math.isfinite(v):
        return str(v)
    return format(v, f".{precision}g")


def _rounded(obj, precision: int):
    """Round all floats in a JSON-ready structure; non-finite becomes null."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return None
        return float(format(obj, f".{precision}g"))
    if isinstance(obj, (list, tuple)):
        return [_rounded(v, precision) for v in obj]
    if isinstance(obj, dict):
        return {k: _rounded(v, precision) for k, v in obj.items()}
    return obj


def _write_out(text: str, out: OutputSpec) -> None:
    if out.path is None:
        sys.stdout.write(text)
    else:
        with open(out.path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _output_spec(args: argparse.Namespace) -> OutputSpec:
    return OutputSpec(args.format, args.out, args.precision)


def _add_output_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--format", choices=["csv", "json", "plain"], default="plain",
                    help="output format (default plain)")
    sp.add_argument("--out", default=None, metavar="PATH",
                    help="write output to PATH instead of standard output")
    sp.add_argument("--precision", type=int, default=15, metavar="DIGITS",
                    help="significant digits for numeric output, 1..17 (default 15)")


def _add_grid_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--var-min", type=float, default=None, help="grid minimum for x or phi")
    sp.add_argument("--var-max", type=float, default=None, help="grid maximum for x or phi")
    sp.add_argument("--var-count", type=int, default=None, help="number of x/phi grid points")
    sp.add_argument("--r-min", type=float, default=None, help="grid minimum for r")
    sp.add_argument("--r-max", type=float, default=None, help="grid maximum for r")
    sp.add_argument("--r-count", type=int, default=None, help="number of r grid points")
    sp.add_argument("--inset", type=float, default=None,
                    help=f"endpoint inset delta (default {DEFAULT_INSET:g})")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cosmax",
        description="Evaluate and verify the alternating Chebyshev cosine series "
                    "sum (-1)^(k+1) r^k T_k(x)/(k+2) by series, quadrature, and "
                    "closed-form routes.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate at a single point")
    where = pe.add_mutually_exclusive_group(required=True)
    where.add_argument("--x", type=float, help="x in (-1, 1]")
    where.add_argument("--phi", type=float, help="angle in [0, pi) radians; x = cos(phi)")
    pe.add_argument("--r", type=float, required=True, help="r in (0, 1]")
    pe.add_argument("--route", choices=["series", "quad", "closed", "auto"], default="auto")
    pe.add_argument("--tol", type=float, default=1e-12, help="absolute tolerance (default 1e-12)")
    pe.add_argument("--degrees", action="store_true", help="interpret --phi in degrees")
    _add_output_flags(pe)

    ps = sub.add_parser("scan", help="run a verification scan over a grid")
    ps.add_argument("--kind", choices=["consistency", "monotonicity", "inequality", "identity"],
                    required=True, help="identity uses its fixed grid; grid flags are ignored")
    _add_grid_flags(ps)
    ps.add_argument("--tol", type=float, default=1e-10, help="absolute tolerance (default 1e-10)")
    _add_output_flags(ps)

    pt = sub.add_parser("table", help="emit per-point rows over a grid")
    pt.add_argument("--surface", choices=["f", "dfdx", "margin"], required=True)
    _add_grid_flags(pt)
    pt.add_argument("--tol", type=float, default=1e-12, help="absolute tolerance (default 1e-12)")
    _add_output_flags(pt)
    return p


def _grid_from_args(args: argparse.Namespace, kind: str) -> ScanGrid:
    inset = args.inset if args.inset is not None else DEFAULT_INSET
    base = default_grid(kind, inset)
    return ScanGrid(
        base.var_kind,
        args.var_min if args.var_min is not None else base.var_min,
        args.var_max if args.var_max is not None else base.var_max,
        args.var_count if args.var_count is not None else base.var_count,
        args.r_min if args.r_min is not None else base.r_min,
        args.r_max if args.r_max is not None else base.r_max,
        args.r_count if args.r_count is not None else base.r_count,
        inset,
    )


def _eval_result(args: argparse.Namespace) -> EvalResult:
    tol = Tolerance(args.tol)
    if args.phi is not None:
        phi = math.radians(args.phi) if args.degrees else args.phi
        a = AnglePoint(phi, args.r)
        if args.route == "series":
            return fourier_series(a, tol)
        p = EvalPoint(math.cos(a.phi), a.r)
        return _run_route(p, args.route, tol)
    if args.degrees:
        raise DomainError("--degrees is only meaningful together with --phi")
    p = EvalPoint(args.x, args.r)
    return _run_route(p, args.route, tol)


def _run_route(p: EvalPoint, route: str, tol: Tolerance) -> EvalResult:
    if route == "series":
        return f_series(p, tol)
    if route == "quad":
        return f_quad(p, tol)
    if route == "closed":
        return f_closed(p)
    return dispatch_eval(p, tol)


def cmd_eval(args: argparse.Namespace) -> int:
    out = _output_spec(args)
    res = _eval_result(args)
    pr = out.precision
    if out.format == "csv":
        text = _csv_text(
            ["value", "error_bound", "route", "work"],
            [[_fmt(res.value, pr), _fmt(res.error_bound, pr), res.route, str(res.work)]],
        )
    elif out.format == "json":
        payload = _rounded(
            {"value": res.value, "error_bound": res.error_bound,
             "route": res.route, "work": res.work},
            pr,
        )
        text = json.dumps(payload) + "\n"
    else:
        text = (
            f"value = {_fmt(res.value, pr)}\n"
            f"error_bound = {_fmt(res.error_bound, pr)}\n"
            f"route = {res.route}\n"
            f"work = {res.work}\n"
        )
    _write_out(text, out)
    return EXIT_OK


def _report_text(report: Report, out: OutputSpec) -> str:
    pr = out.precision
    if out.format == "csv":
        header = ["kind", "points_checked", "violations", "min_margin",
                  "worst_var", "worst_r", "pass"]
        row = [
            report.kind,
            str(report.points_checked),
            str(len(report.violations)),
            _fmt(report.min_margin, pr),
            _fmt(report.worst_point[0], pr),
            _fmt(report.worst_point[1], pr),
            "true" if report.passed else "false",
        ]
        return _csv_text(header, [row])
    if out.format == "json":
        return json.dumps(_rounded(report.as_dict(), pr)) + "\n"
    lines = [
        f"kind = {report.kind}",
        f"points_checked = {report.points_checked}",
        f"violations = {len(report.violations)}",
        f"min_margin = {_fmt(report.min_margin, pr)}",
        f"worst_point = ({_fmt(report.worst_point[0], pr)}, {_fmt(report.worst_point[1], pr)})",
        f"pass = {'true' if report.passed else 'false'}",
        f"elapsed_s = {report.elapsed:.3f}",
    ]
    for v in report.violations:
        lines.append(
            f"violation: var = {_fmt(v.var, pr)}, r = {_fmt(v.r, pr)}, "
            f"observed = {_fmt(v.observed, pr)}, bound = {_fmt(v.bound, pr)}"
        )
    return "\n".join(lines) + "\n"


def cmd_scan(args: argparse.Namespace) -> int:
    out = _output_spec(args)
    tol = Tolerance(args.tol)
    if args.kind == "identity":
        report = identity_scan(tol)
    else:
        grid = _grid_from_args(args, args.kind)
        runner = {
            "consistency": consistency_scan,
            "monotonicity": monotonicity_scan,
            "inequality": inequality_scan,
        }[args.kind]
        report = runner(grid, tol)
    _write_out(_report_text(report, out), out)
    return EXIT_OK if report.passed else EXIT_VIOLATIONS


def _table_rows(args: argparse.Namespace) -> list[tuple[float, float, float, float, str]]:
    tol = Tolerance(args.tol)
    if args.surface == "margin":
        grid = _grid_from_args(args, "inequality")
        rows = []
        for phi in grid.var_values():
            x = math.cos(phi)
            for r in grid.r_values():
                res = dispatch_eval(EvalPoint(x, r), tol)
                value = f_at_one(r) - res.value
                bound = res.error_bound + f_at_one_error_bound(r)
                rows.append((phi, r, value, bound, res.route))
        return rows
    grid = _grid_from_args(args, "consistency")
    evaluate = dispatch_eval if args.surface == "f" else dfdx_quad
    rows = []
    for x in grid.var_values():
        for r in grid.r_values():
            res = evaluate(EvalPoint(x, r), tol)
            rows.append((x, r, res.value, res.error_bound, res.route))
    return rows


def cmd_table(args: argparse.Namespace) -> int:
    out = _output_spec(args)
    rows = _table_rows(args)
    pr = out.precision
    if out.format == "csv":
        text = _csv_text(
            TABLE_HEADER.split(","),
            [[_fmt(var, pr), _fmt(r, pr), _fmt(val, pr), _fmt(bound, pr), route]
             for var, r, val, bound, route in rows],
        )
    elif out.format == "json":
        payload = [
            _rounded({"var": var, "r": r, "value": val, "error_bound": bound, "route": route}, pr)
            for var, r, val, bound, route in rows
        ]
        text = json.dumps(payload) + "\n"
    else:
        lines = [TABLE_HEADER.replace(",", " ")]
        lines += [
            f"{_fmt(var, pr)} {_fmt(r, pr)} {_fmt(val, pr)} {_fmt(bound, pr)} {route}"
            for var, r, val, bound, route in rows
        ]
        text = "\n".join(lines) + "\n"
    _write_out(text, out)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "eval":
            return cmd_eval(args)
        if args.command == "scan":
            return cmd_scan(args)
        return cmd_table(args)
    except (DomainError, UnsupportedParameters) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except ToleranceUnreachable as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_TOLERANCE
