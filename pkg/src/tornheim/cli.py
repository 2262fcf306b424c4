"""Command line front end: ``tornheim eval | verify | table``.

Exit codes: 0 on success, 1 when a verification check fails, 2 on bad
input or configuration.  ``TORNHEIM_PREC`` overrides ``--prec``.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

import mpmath

from tornheim.core.closed_forms import symmetric_even_bernoulli, symmetric_even_zeta
from tornheim.core.direct import DEFAULT_MAX_TERMS, TruncationError
from tornheim.core.dispatch import METHODS, evaluate
from tornheim.core.integer import tornheim_integer
from tornheim.numeric import DEFAULT_DPS, get_precision, set_precision
from tornheim.quadrature import QuadratureConfig, QuadratureError
from tornheim.specfun import DomainError
from tornheim.verify import SUITES, ReportEntry, VerifyConfig, run_checks

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2

MAX_TABLE_WEIGHT = 12
DEFAULT_REPORT = "tornheim-report.json"


class ConfigError(Exception):
    """Bad command line configuration (exit code 2)."""


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not v > 0 or math.isinf(v):
        raise argparse.ArgumentTypeError(f"expected a positive finite number, got {text}")
    return v


def _param(text: str) -> mpmath.mpf:
    try:
        return mpmath.mpf(text)
    except (ValueError, TypeError):
        raise argparse.ArgumentTypeError(f"not a real number: {text!r}") from None


def apply_precision(cli_prec: int | None) -> int:
    """Set the working precision; TORNHEIM_PREC wins over --prec."""
    raw = os.environ.get("TORNHEIM_PREC", "").strip()
    if raw:
        try:
            dps = int(raw)
        except ValueError:
            raise ConfigError(f"TORNHEIM_PREC must be an integer, got {raw!r}") from None
    else:
        dps = cli_prec if cli_prec is not None else DEFAULT_DPS
    try:
        set_precision(dps)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    return dps


def parse_weight_range(text: str) -> tuple[int, int]:
    """'5' or '3-7' (inclusive) -> (lo, hi)."""
    parts = text.split("-")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise ConfigError(f"weight range must look like 5 or 3-7, got {text!r}") from None
    if lo < 3 or hi < lo or hi > MAX_TABLE_WEIGHT:
        raise ConfigError(f"weight range must satisfy 3 <= lo <= hi <= {MAX_TABLE_WEIGHT}, got {text!r}")
    return lo, hi


def _fmt(x, digits: int = 20) -> str:
    if x == int(x) and abs(x) < 10 ** 15:
        return str(int(x))
    return mpmath.nstr(x, digits)


# -------------------------------------------------------------------------
# eval
# -------------------------------------------------------------------------

def cmd_eval(args: argparse.Namespace) -> int:
    r = evaluate(args.a, args.b, args.c, method=args.method, max_terms=args.max_terms)
    tag = "estimate" if r.heuristic else "bound"
    value = mpmath.nstr(r.value, get_precision())
    print(f"T({_fmt(args.a, 10)}, {_fmt(args.b, 10)}, {_fmt(args.c, 10)}) = {value}")
    print(f"err ({tag}): {_fmt(r.err, 3)}")
    print(f"method: {r.method.value}")
    return EXIT_OK


# -------------------------------------------------------------------------
# verify
# -------------------------------------------------------------------------

def _entry_line(e: ReportEntry) -> str:
    res = "-" if math.isnan(e.residual) else f"{e.residual:.2e}"
    line = f"{e.status.upper():7s} {e.check_id:44s} residual {res:>9s}  tol {e.tolerance:.0e}"
    if e.status != "pass" and e.notes:
        line += f"  ({e.notes})"
    return line


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = VerifyConfig(tol=args.tol, max_terms=args.max_terms)
    text = args.format == "text"
    report = run_checks(args.suite, cfg, progress=(lambda e: print(_entry_line(e))) if text else None)
    doc = report.to_dict()
    if args.out:
        Path(args.out).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
    if text:
        c = report.counts
        print(f"\n{len(report.entries)} checks: {c['pass']} pass, {c['fail']} fail, "
              f"{c['skipped']} skipped  [{report.header['precision_dps']} digits, "
              f"{report.header['elapsed_s']} s]")
        if args.out:
            print(f"report written to {args.out}")
    else:
        print(json.dumps(doc, indent=2))
    return EXIT_OK if report.ok else EXIT_FAIL


# -------------------------------------------------------------------------
# table
# -------------------------------------------------------------------------

def _table_rows(lo: int, hi: int, max_terms: int) -> list[dict]:
    cfg = QuadratureConfig()
    rows = []
    for w in range(lo, hi + 1):
        for a in range(1, w - 1):
            for b in range(1, w - a):
                c = w - a - b
                primary = evaluate(a, b, c, max_terms=max_terms)
                routes = {primary.method.value: primary}
                routes.setdefault("parity-assembly", tornheim_integer(a, b, c, cfg))
                if a == b == c and a % 2 == 0:
                    routes["symmetric-even"] = symmetric_even_zeta(a // 2)
                    routes["symmetric-even-bernoulli"] = symmetric_even_bernoulli(a // 2)
                spread = max(abs(r.value - primary.value) for r in routes.values())
                rows.append({
                    "triple": [a, b, c],
                    "weight": w,
                    "value": mpmath.nstr(primary.value, get_precision()),
                    "err": float(primary.err),
                    "method": primary.method.value,
                    "routes": sorted(routes),
                    "max_route_spread": float(spread),
                })
    return rows


def cmd_table(args: argparse.Namespace) -> int:
    lo, hi = parse_weight_range(args.weight)
    rows = _table_rows(lo, hi, args.max_terms)
    if args.format == "json":
        print(json.dumps({"precision_dps": get_precision(), "rows": rows}, indent=2))
        return EXIT_OK
    print(f"{'triple':<12} {'value':<34} {'method':<18} {'spread':>9}  routes")
    for r in rows:
        t = "({},{},{})".format(*r["triple"])
        print(f"{t:<12} {r['value']:<34} {r['method']:<18} {r['max_route_spread']:9.1e}  "
              f"{', '.join(r['routes'])}")
    return EXIT_OK


# -------------------------------------------------------------------------
# entry point
# -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prec", type=_positive_int, default=None,
                        help=f"working precision in decimal digits (default {DEFAULT_DPS}; "
                             "TORNHEIM_PREC overrides)")
    common.add_argument("--max-terms", type=_positive_int, default=DEFAULT_MAX_TERMS,
                        help="term budget for the direct double sum")

    parser = argparse.ArgumentParser(prog="tornheim", description="Tornheim double series toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate T(a, b, c)")
    p.add_argument("a", type=_param)
    p.add_argument("b", type=_param)
    p.add_argument("c", type=_param)
    p.add_argument("--method", choices=METHODS, default="auto")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", parents=[common], help="run the identity checks")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--tol", type=_positive_float, default=None,
                   help="absolute tolerance applied to every check (default: per-check)")
    p.add_argument("--out", default=DEFAULT_REPORT, help="JSON report path ('' to skip)")
    p.add_argument("--format", choices=("json", "text"), default="text",
                   help="standard output format")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", parents=[common], help="tabulate T at integer triples")
    p.add_argument("--weight", default="3-6", help="a weight or an inclusive range such as 3-7")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        apply_precision(args.prec)
        return args.func(args)
    except ConfigError as exc:
        print(f"tornheim {args.command}: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DomainError as exc:
        print(f"tornheim {args.command}: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (TruncationError, QuadratureError) as exc:
        print(f"tornheim {args.command}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
