"""Command-line entry point: ``hypercurves {verify,count,period,gauss2f1}``.

Exit status is 0 when every check passes, 1 when any fails and 2 on a
configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import curve_count as cc
from . import periods
from .errors import BadReduction, HyperCurvesError, InvalidConfig
from .ff_char import make_field
from .gauss_hyper import GaussSeriesSpec, gauss_2f1_fast, gauss_nfn_definitional
from .verify import Suite, emit_report, exit_code, run_all, run_suite, summary_line

EXIT_CONFIG = 2
# the definitional series is O(p**2); only offer it on small fields
DEFINITIONAL_P_MAX = 1000


def _parse_l_set(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part:
            lo, hi = part.split("-")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def _parse_lambda(text: str):
    if text == "all":
        return "all"
    return [Fraction(v.strip()) for v in text.split(",") if v.strip()]


def _write(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_verify(args) -> int:
    kwargs = {}
    if args.p_max is not None:
        kwargs["p_max"] = args.p_max
    if args.l is not None:
        kwargs["l_set"] = _parse_l_set(args.l)
    if args.lambda_ is not None:
        kwargs["lambda_spec"] = _parse_lambda(args.lambda_)
    if args.tol is not None:
        kwargs["tol"] = args.tol
    if args.suite == "all":
        reports = run_all(jobs=args.jobs, **kwargs)
    else:
        reports = run_suite(args.suite, jobs=args.jobs, **kwargs)
    _write(emit_report(reports, args.format, timing=not args.no_timing), args.out)
    if args.format != "text":
        print(summary_line(reports), file=sys.stderr)
    return exit_code(reports)


def _cmd_count(args) -> int:
    params = cc.CurveParams(args.l, Fraction(args.lambda_))
    curve = cc.reduce_curve(params, args.p)
    res = cc.count_points_brute(curve)
    out = {
        "p": args.p,
        "l": args.l,
        "lambda": str(params.lam),
        "lambda_mod_p": curve.lam,
        "total": res.total,
        "affine": res.affine,
        "at_infinity": res.at_infinity,
        "a_p": res.a_p,
    }
    status = 0
    if (args.p - 1) % args.l == 0:
        exact = cc.ap_theorem4(curve)
        z = cc.ap_theorem4_complex(curve)
        out["a_p_character_sum"] = exact
        out["minus_a_p_hypergeometric"] = [z.real, z.imag]
        status = 0 if exact == res.a_p else 1
    _write(json.dumps(out, indent=1) + "\n", args.out)
    return status


def _cmd_period(args) -> int:
    lam = float(Fraction(args.lambda_))
    q = periods.omega_quadrature(args.l, lam)
    c = periods.omega_closed_form(args.l, lam)
    rel = abs(q.value - c.value) / c.value
    out = {
        "l": args.l,
        "lambda": lam,
        "quadrature": q.value,
        "quadrature_error": q.est_error,
        "closed_form": c.value,
        "rel_err": rel,
    }
    _write(json.dumps(out, indent=1) + "\n", args.out)
    return 0 if rel <= args.tol else 1


def _cmd_gauss2f1(args) -> int:
    ctx = make_field(args.p)
    A, B, C = (ctx.character(k) for k in (args.a, args.b, args.c))
    z = gauss_2f1_fast(A, B, C, args.x)
    out = {"p": args.p, "a": A.k, "b": B.k, "c": C.k, "x": args.x % args.p, "value": [z.real, z.imag]}
    status = 0
    if args.p <= DEFINITIONAL_P_MAX:
        d = gauss_nfn_definitional(GaussSeriesSpec((A, B), (C,), args.x))
        out["definitional"] = [d.real, d.imag]
        out["abs_err"] = abs(z - d)
        status = 0 if abs(z - d) <= args.tol else 1
    _write(json.dumps(out, indent=1) + "\n", args.out)
    return status


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hypercurves", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=["all"] + [s.value for s in Suite])
    v.add_argument("--p-max", type=int)
    v.add_argument("--l", help="e.g. 2,3,5 or 2-7")
    v.add_argument("--lambda", dest="lambda_", help="'all' or comma-separated rationals like 1/2,-1")
    v.add_argument("--tol", type=float)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=["json", "csv", "text"], default="text")
    v.add_argument("--out")
    v.add_argument("--no-timing", action="store_true", help="write runtime_ms as 0 for reproducible output")
    v.set_defaults(func=_cmd_verify)

    c = sub.add_parser("count", help="count points on y^l = x(x-1)(x-lambda) over F_p")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--l", type=int, required=True)
    c.add_argument("--lambda", dest="lambda_", required=True)
    c.add_argument("--out")
    c.set_defaults(func=_cmd_count)

    pr = sub.add_parser("period", help="Omega by quadrature and by closed form")
    pr.add_argument("--l", type=int, required=True)
    pr.add_argument("--lambda", dest="lambda_", required=True)
    pr.add_argument("--tol", type=float, default=1e-8)
    pr.add_argument("--out")
    pr.set_defaults(func=_cmd_period)

    g = sub.add_parser("gauss2f1", help="Gaussian 2F1 over F_p; characters given by exponent k")
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--a", type=int, required=True)
    g.add_argument("--b", type=int, required=True)
    g.add_argument("--c", type=int, required=True)
    g.add_argument("--x", type=int, required=True)
    g.add_argument("--tol", type=float, default=1e-8)
    g.add_argument("--out")
    g.set_defaults(func=_cmd_gauss2f1)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidConfig, BadReduction, HyperCurvesError, ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
