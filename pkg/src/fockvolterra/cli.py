"""Command-line front end.

Subcommands: spectrum, scan, verify, norm, apply, resolvent. All output is
deterministic: identical invocations produce byte-identical bytes. JSON
output is a single object with "schema", "config", and "rows"; CSV carries a
mandatory header row and 17-significant-digit numbers.

Exit codes: 0 success (verify: all PASS), 1 usage/parse/precondition
failure, 2 unbounded operator.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import verify as verify_suites
from .operators import apply_tg, resolvent_apply
from .series import TruncatedSeries
from .spaces import FockParams, build_scheme, series_norm
from .spectral import (
    UnboundedOperatorError,
    classify_spectrum,
    membership_scan,
    resolvent_norm_probe,
)
from .symparse import SymbolParseError, format_symbol, parse_series, parse_symbol

SCHEMA = "fockvolterra/1"


def _fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.17g}"
    return str(x)


def _parse_complex(text: str) -> complex:
    t = text.strip().replace(" ", "").strip("()").replace("i", "j")
    try:
        return complex(t)
    except ValueError:
        raise SymbolParseError(f"cannot parse complex number {text!r}", 0)


def _emit(payload: dict, fmt: str, out: str | None):
    if fmt == "json":
        text = json.dumps(payload, sort_keys=False)
    else:
        rows = payload.get("rows", [])
        buf = io.StringIO()
        if rows:
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(rows[0].keys())
            for row in rows:
                writer.writerow([_fmt(v) for v in row.values()])
        text = buf.getvalue().rstrip("\n")
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _config(args, **extra) -> dict:
    cfg = {"p": args.p, "alpha": args.alpha, "A": args.big_a}
    cfg.update(extra)
    return cfg


def _add_params(sp, p_default=2.0):
    sp.add_argument("--p", type=float, default=p_default)
    sp.add_argument("--alpha", type=float, default=1.0)
    sp.add_argument("--A", dest="big_a", type=float, default=2.0)
    sp.add_argument("--order", type=int, default=96)
    sp.add_argument("--radial-nodes", type=int, default=None)
    sp.add_argument("--format", choices=("csv", "json"), default="json")
    sp.add_argument("--out", default=None)


def cmd_spectrum(args) -> int:
    g, _ = parse_symbol(args.g)
    params = FockParams(args.p, args.alpha, args.big_a)
    try:
        desc = classify_spectrum(g, params)
    except UnboundedOperatorError as exc:
        print(f"unbounded operator: {exc}", file=sys.stderr)
        return 2
    payload = {
        "schema": SCHEMA,
        "config": _config(args, g=format_symbol(g)),
        "kind": desc.kind,
        "radius": desc.radius,
        "provenance": desc.provenance,
    }
    if args.format == "csv":
        payload["rows"] = [
            {"kind": desc.kind, "radius": desc.radius, "provenance": desc.provenance}
        ]
    _emit(payload, args.format, args.out)
    return 0


def _scan_grid(args) -> list[complex]:
    radii = np.linspace(args.grid_inner, args.grid_outer, args.grid_rings)
    grid = []
    for r in radii:
        for j in range(args.grid_count):
            theta = 2.0 * math.pi * j / args.grid_count
            grid.append(complex(r * math.cos(theta), r * math.sin(theta)))
    return grid


def cmd_scan(args) -> int:
    g, _ = parse_symbol(args.g)
    params = FockParams(args.p, args.alpha, args.big_a)
    grid = _scan_grid(args)
    if any(lam == 0 for lam in grid):
        print("grid contains lambda = 0", file=sys.stderr)
        return 1
    verdicts = membership_scan(g, params, grid)
    scheme = build_scheme(params, args.order, radial_nodes=args.radial_nodes)
    probes = [TruncatedSeries.one(0)]
    rows = []
    for lam, verdict in verdicts:
        ratio = resolvent_norm_probe(g, lam, params, probes, args.order, scheme)
        rows.append(
            {
                "re_lambda": lam.real,
                "im_lambda": lam.imag,
                "verdict": verdict.value,
                "probe_ratio": ratio,
            }
        )
    payload = {
        "schema": SCHEMA,
        "config": _config(
            args,
            g=format_symbol(g),
            order=args.order,
            grid_inner=args.grid_inner,
            grid_outer=args.grid_outer,
            grid_rings=args.grid_rings,
            grid_count=args.grid_count,
        ),
        "rows": rows,
    }
    _emit(payload, args.format, args.out)
    return 0


def cmd_verify(args) -> int:
    if args.suite not in verify_suites.SUITES:
        print(
            f"unknown suite {args.suite!r}; choose from {verify_suites.SUITES}",
            file=sys.stderr,
        )
        return 1
    params = FockParams(args.p, args.alpha, args.big_a)
    try:
        if args.suite == "norms":
            rows, ok = verify_suites.suite_norms()
        elif args.suite == "lp":
            rows, ok = verify_suites.suite_lp(args.n_max)
        elif args.suite == "weighted-lp":
            rows, ok = verify_suites.suite_weighted_lp()
        elif args.suite == "boundary":
            rows, ok = verify_suites.suite_boundary()
        else:
            g, _ = parse_symbol(args.g)
            rows, ok = verify_suites.suite_boundedness(g, params)
    except ValueError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return 1
    payload = {
        "schema": SCHEMA,
        "config": _config(args, suite=args.suite),
        "rows": rows,
        "result": "PASS" if ok else "FAIL",
    }
    _emit(payload, args.format, args.out)
    print(f"{args.suite}: {'PASS' if ok else 'FAIL'}", file=sys.stderr)
    return 0 if ok else 3


def cmd_norm(args) -> int:
    f = parse_series(args.f)
    params = FockParams(args.p, args.alpha, args.big_a)
    scheme = build_scheme(params, f.order, radial_nodes=args.radial_nodes)
    value = series_norm(f, params, scheme)
    payload = {
        "schema": SCHEMA,
        "config": _config(args, f=args.f),
        "rows": [{"norm": value}],
    }
    _emit(payload, args.format, args.out)
    return 0


def _coeff_rows(f: TruncatedSeries) -> list[dict]:
    return [
        {"k": k, "re": c.real, "im": c.imag} for k, c in enumerate(f.coeffs.tolist())
    ]


def cmd_apply(args) -> int:
    g, _ = parse_symbol(args.g)
    f = parse_series(args.f)
    out = apply_tg(g, f)
    payload = {
        "schema": SCHEMA,
        "config": _config(args, g=format_symbol(g), f=args.f),
        "rows": _coeff_rows(out),
    }
    _emit(payload, args.format, args.out)
    return 0


def cmd_resolvent(args) -> int:
    g, _ = parse_symbol(args.g)
    f = parse_series(args.f)
    lam = _parse_complex(args.lam)
    if lam == 0:
        print("lambda must be nonzero", file=sys.stderr)
        return 1
    out = resolvent_apply(g, lam, f, args.order)
    payload = {
        "schema": SCHEMA,
        "config": _config(
            args, g=format_symbol(g), f=args.f, **{"lambda": args.lam}, order=args.order
        ),
        "rows": _coeff_rows(out),
    }
    _emit(payload, args.format, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="fockvolterra",
        description="Volterra integration operators on generalized Fock spaces",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="classify the spectrum of T_g")
    sp.add_argument("--g", required=True)
    _add_params(sp)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("scan", help="membership scan over a lambda annulus")
    sp.add_argument("--g", required=True)
    sp.add_argument("--grid-inner", type=float, default=0.5)
    sp.add_argument("--grid-outer", type=float, default=2.0)
    sp.add_argument("--grid-rings", type=int, default=4)
    sp.add_argument("--grid-count", type=int, default=16)
    _add_params(sp)
    sp.set_defaults(func=cmd_scan, order=32)

    sp = sub.add_parser("verify", help="run a named verification suite")
    sp.add_argument("suite")
    sp.add_argument("--g", default="z^2")
    sp.add_argument("--n-max", type=int, default=40)
    _add_params(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("norm", help="quadrature norm of a series")
    sp.add_argument("--f", required=True)
    _add_params(sp)
    sp.set_defaults(func=cmd_norm)

    sp = sub.add_parser("apply", help="apply T_g to a series")
    sp.add_argument("--g", required=True)
    sp.add_argument("--f", required=True)
    _add_params(sp)
    sp.set_defaults(func=cmd_apply)

    sp = sub.add_parser("resolvent", help="apply the resolvent R_{lambda,g}")
    sp.add_argument("--g", required=True)
    sp.add_argument("--f", required=True)
    sp.add_argument("--lambda", dest="lam", required=True)
    _add_params(sp)
    sp.set_defaults(func=cmd_resolvent)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except SymbolParseError as exc:
        print(f"parse error {exc}", file=sys.stderr)
        return 1
    except UnboundedOperatorError as exc:
        print(f"unbounded operator: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
