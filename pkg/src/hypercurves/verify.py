"""Sweep runner: enumerate identity checks, run them, and report.

Each suite expands into independent tasks (usually one per ``(l, p)``),
which run in a process pool when ``jobs > 1``. Reports are sorted by
``(l, p, lambda)`` before they are returned, so output never depends on
the number of workers. Only ``runtime_ms`` varies between runs; pass
``timing=False`` to :func:`emit_report` for byte-identical output.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import math
import multiprocessing
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import classical_hyper as ch
from . import curve_count as cc
from . import gauss_hyper as gh
from . import periods
from .errors import BadReduction, HyperCurvesError, InvalidConfig
from .ff_char import make_field, odd_primes


class Suite(str, enum.Enum):
    THM1 = "Thm1"
    THM2 = "Thm2"
    THM3 = "Thm3"
    THM4 = "Thm4"
    THM5_PERIOD = "Thm5Period"
    THM5_TRACE = "Thm5Trace"
    THM6 = "Thm6"
    COR37 = "Cor37"
    COR_HASSE = "CorHasse"
    COR_MINUS1 = "CorMinus1"
    COR_HALF_CHAR = "CorHalfChar"
    GREENE_EQ25 = "GreeneEq25"
    GREENE_EQ26 = "GreeneEq26"
    ORACLE_NFN = "OracleNFN"
    KUMMER = "Kummer"
    PFAFF = "Pfaff"
    SERIES_INTEGRAL = "SeriesIntegral"


class Status(str, enum.Enum):
    PASS = "Pass"
    FAIL = "Fail"
    SKIPPED = "Skipped"


EXACT_SUITES = frozenset({Suite.THM2, Suite.THM4, Suite.THM5_TRACE, Suite.COR37})
ORACLE_SUITES = frozenset({Suite.GREENE_EQ25, Suite.GREENE_EQ26, Suite.ORACLE_NFN})
ANALYTIC_SUITES = frozenset(
    {Suite.THM1, Suite.THM3, Suite.THM5_PERIOD, Suite.KUMMER, Suite.PFAFF, Suite.SERIES_INTEGRAL}
)

DEFAULT_P_MAX = 500
DEFAULT_P_MAX_ORACLE = 101
LAMBDA_GRID = tuple(Fraction(k, 10) for k in range(1, 10))
RANDOM_GRID_SIZE = 50
RANDOM_GRID_SEED = 20111

DEFAULT_L = {
    Suite.THM1: (2,),
    Suite.THM2: (2,),
    Suite.THM3: (2, 3, 4, 5, 6),
    Suite.THM4: (2, 3, 4, 5, 6, 7),
    Suite.THM5_PERIOD: (2, 3, 4, 5, 6),
    Suite.THM5_TRACE: (2, 3, 4, 5, 6, 7),
    Suite.THM6: (2,),
    Suite.COR37: (2, 3, 4, 5, 6, 7),
    Suite.COR_HASSE: (3, 4, 5, 6, 7),
    Suite.COR_MINUS1: (3,),
    Suite.COR_HALF_CHAR: (3,),
    Suite.KUMMER: (2, 3, 4, 5, 6),
    Suite.PFAFF: (2, 3, 4, 5, 6),
}

DEFAULT_TOL = {
    Suite.THM1: 1e-8,
    Suite.THM3: 1e-8,
    Suite.THM5_PERIOD: 1e-8,
    Suite.THM6: 1e-8,
    Suite.COR_MINUS1: 1e-6,
    Suite.COR_HALF_CHAR: 1e-6,
    Suite.COR_HASSE: 1e-9,
    Suite.GREENE_EQ25: 1e-8,
    Suite.GREENE_EQ26: 1e-8,
    Suite.ORACLE_NFN: 1e-8,
    Suite.KUMMER: 1e-9,
    Suite.PFAFF: 1e-9,
    Suite.SERIES_INTEGRAL: 1e-9,
}

CSV_COLUMNS = (
    "suite",
    "l",
    "p",
    "lambda_num",
    "lambda_den",
    "lhs_re",
    "lhs_im",
    "rhs",
    "abs_err",
    "status",
    "runtime_ms",
)


@dataclass(frozen=True)
class Case:
    suite: Suite
    l: int | None = None
    p: int | None = None
    lam: Fraction | None = None
    tolerance: float = 0.0
    # suite-specific parameters that do not fit (l, p, lambda), e.g. (a, b, c, z)
    extra: tuple = ()


@dataclass
class VerifyReport:
    case: Case
    lhs: complex | float | int | None
    rhs: float | int | None
    abs_err: float
    status: Status
    runtime_ms: float = 0.0
    reason: str = ""
    seq: int = field(default=0, repr=False)


def _skip(case: Case, reason: str) -> VerifyReport:
    return VerifyReport(case, None, None, 0.0, Status.SKIPPED, reason=reason)


def _exact(case: Case, lhs, rhs, ok: bool, reason: str = "") -> VerifyReport:
    return VerifyReport(case, lhs, rhs, 0.0 if ok else 1.0, Status.PASS if ok else Status.FAIL, reason=reason)


def _numeric(case: Case, lhs, rhs, err: float, reason: str = "") -> VerifyReport:
    ok = bool(np.isfinite(err)) and err <= case.tolerance
    return VerifyReport(case, lhs, rhs, float(err), Status.PASS if ok else Status.FAIL, reason=reason)


def _rel(lhs, rhs) -> float:
    return abs(lhs - rhs) / max(1.0, abs(rhs))


# --- task bodies ----------------------------------------------------------
# Every task is a picklable tuple (suite, payload); the runner returns a
# list of reports.


def _lams_for(p: int, l: int, lambda_spec) -> list[tuple[Fraction, int | None, str]]:
    """``(lambda, residue or None, skip reason)`` for one prime."""
    if lambda_spec == "all":
        return [(Fraction(lam), lam, "") for lam in range(2, p)]
    out = []
    for lam in lambda_spec:
        try:
            red = cc.reduce_curve(cc.CurveParams(l, lam), p)
            out.append((Fraction(lam), red.lam, ""))
        except BadReduction as exc:
            out.append((Fraction(lam), None, f"bad reduction: {exc.reason.value}"))
    return out


def _task_trace_sweep(suite: Suite, l: int, p: int, lambda_spec, tol: float) -> list[VerifyReport]:
    ctx = make_field(p)
    lams = _lams_for(p, l, lambda_spec)
    counts = cc.count_points_all(ctx, l)
    reports = []
    if suite is Suite.THM4:
        exact = cc.ap_theorem4_all(ctx, l)
        cplx = cc.ap_theorem4_complex_all(ctx, l)
    elif suite is Suite.THM2:
        phi = ctx.quadratic
        vals = gh.gauss_2f1_fast_many(phi, phi, ctx.trivial, list(range(2, p)))
        thm2 = dict(zip(range(2, p), (p * complex(v) for v in vals)))
        sign = int(round(phi(-1).real))
    else:
        hw = cc.hasse_weil_all(ctx, l)
    for lam, res, why in lams:
        case = Case(suite, l, p, lam, tol)
        if res is None:
            reports.append(_skip(case, why))
            continue
        a_p = counts[res].a_p
        if suite is Suite.THM4:
            e = exact[res]
            reason = ""
            try:
                bridge = cc.round_exact(cplx[res]) == -e
            except HyperCurvesError as exc:
                bridge, reason = False, str(exc)
            if not bridge and not reason:
                reason = "complex path disagrees"
            reports.append(_exact(case, e, a_p, e == a_p and bridge, reason))
        elif suite is Suite.THM2:
            z = thm2[res]
            try:
                ok = cc.round_exact(z) == -sign * a_p
                reason = ""
            except HyperCurvesError as exc:
                ok, reason = False, str(exc)
            reports.append(_exact(case, z, -sign * a_p, ok, reason))
        else:
            value, bound = hw[res]
            reports.append(_numeric(case, value, bound, max(0.0, value - bound)))
    return reports


def _task_half(suite: Suite, l: int, p: int, tol: float) -> list[VerifyReport]:
    ctx = make_field(p)
    case = Case(suite, l, p, Fraction(1, 2), tol)
    a_p = cc.count_points_brute(cc.reduce_curve(cc.CurveParams(l, Fraction(1, 2)), p)).a_p
    try:
        if suite is Suite.THM5_TRACE:
            v = cc.ap_theorem5_half(ctx, l)
            flipped = -cc.round_exact(cc.theorem5_half_value(ctx, l, flip_root=True))
            reason = "square-root choice changed the value" if v == a_p != flipped else ""
            return [_exact(case, v, a_p, v == a_p == flipped, reason)]
        if suite is Suite.COR37:
            v = cc.ap_corollary_3_7(ctx, l)
            return [_exact(case, v, a_p, v == a_p)]
        # Thm6 trace part
        lhs = cc.theorem6_trace_value(ctx).real
        rhs = -ctx.quadratic(2).real * a_p / (2 * p)
        return [_numeric(case, lhs, rhs, abs(lhs - rhs))]
    except HyperCurvesError as exc:
        return [VerifyReport(case, None, a_p, math.inf, Status.FAIL, reason=str(exc))]


def _task_l3_corollary(suite: Suite, p: int, tol: float) -> list[VerifyReport]:
    rep = cc.three_square_rep(p)
    flipped = cc.ThreeSquareRep(-rep.x, -rep.y, p)
    if suite is Suite.COR_MINUS1:
        case = Case(suite, 3, p, Fraction(-1), tol)
        lhs, rhs = cc.corollary_minus1_check(p, rep)
        _, rhs_flip = cc.corollary_minus1_check(p, flipped)
        a_p = cc.count_points_brute(cc.reduce_curve(cc.CurveParams(3, Fraction(-1)), p)).a_p
        brute_ok = -a_p - 2 == rhs
    else:
        case = Case(suite, 3, p, Fraction(1, 2), tol)
        lhs, rhs = cc.corollary_halfchar_check(p, rep)
        _, rhs_flip = cc.corollary_halfchar_check(p, flipped)
        a_p = cc.count_points_brute(cc.reduce_curve(cc.CurveParams(3, Fraction(1, 2)), p)).a_p
        brute_ok = 2 * rhs + 2 == -a_p
    reason = ""
    if not brute_ok:
        reason = f"brute-force a_p = {a_p} disagrees"
    elif rhs_flip != rhs:
        reason = "closed form depends on the sign of (x, y)"
    err = abs(lhs - rhs) if not reason else math.inf
    return [_numeric(case, lhs, rhs, err, reason)]


def _task_greene(suite: Suite, p: int, tol: float) -> list[VerifyReport]:
    ctx = make_field(p)
    chars = ctx.characters()
    worst = (-1.0, 0j, 0j)
    if suite is Suite.ORACLE_NFN:
        for (a, V), (_, W) in zip(gh.definitional_2f1_grid(ctx), gh.fast_2f1_grid(ctx)):
            d = np.abs(V - W)
            i = int(np.argmax(d))
            if d.flat[i] > worst[0]:
                worst = (float(d.flat[i]), complex(V.flat[i]), complex(W.flat[i]))
    else:
        inv2 = ctx.inv(2)
        for A in chars:
            for B in chars:
                if suite is Suite.GREENE_EQ25:
                    lhs = gh.gauss_2f1_fast(A, B, A.conj() * B, -1)
                    rhs = gh.greene_transform_minus1(A, B)
                else:
                    lhs = gh.gauss_2f1_fast(A, A.conj(), A.conj() * B, inv2)
                    rhs = gh.greene_transform_half(A, B)
                d = abs(lhs - rhs)
                if d > worst[0]:
                    worst = (d, lhs, rhs)
    err, lhs, rhs = worst
    return [_numeric(Case(suite, None, p, None, tol), lhs, rhs, err)]


def _random_grid(kind: str) -> list[tuple]:
    rng = random.Random(f"{RANDOM_GRID_SEED}-{kind}")
    out = []
    while len(out) < RANDOM_GRID_SIZE:
        if kind == "kummer":
            a, b = rng.uniform(-0.9, 0.9), rng.uniform(0.1, 2.5)
            out.append((round(a, 6), round(b, 6)))
        else:
            a, b = rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)
            c, z = rng.uniform(0.2, 3.0), rng.uniform(-0.9, 0.45)
            out.append((round(a, 6), round(b, 6), round(c, 6), round(z, 6)))
    return out


PFAFF_Z = tuple(round(-0.9 + 0.1 * k, 10) for k in range(14))  # -0.9 .. 0.4
INTEGRAL_VALUES = tuple(Fraction(k, 6) for k in range(1, 6))
INTEGRAL_Z = tuple(round(-0.9 + 0.1 * k, 10) for k in range(19))  # -0.9 .. 0.9


def _task_analytic(suite: Suite, payload: tuple, tol: float) -> list[VerifyReport]:
    if suite is Suite.THM1:
        (lam,) = payload
        case = Case(suite, 2, None, lam, tol)
        lhs = periods.omega_quadrature(2, float(lam)).value
        rhs = periods.theorem1_rhs(float(lam))
        return [_numeric(case, lhs, rhs, abs(lhs - rhs) / rhs)]
    if suite is Suite.THM3:
        l, lam = payload
        case = Case(suite, l, None, lam, tol)
        lhs = periods.omega_quadrature(l, float(lam)).value
        rhs = periods.omega_closed_form(l, float(lam)).value
        err = abs(lhs - rhs) / rhs
        if l == 2:
            t1 = periods.theorem1_rhs(float(lam))
            err = max(err, abs(rhs - t1) / t1)
        return [_numeric(case, lhs, rhs, err)]
    if suite is Suite.THM5_PERIOD:
        (l,) = payload
        lhs, rhs = periods.theorem5_period_check(l)
        return [_numeric(Case(suite, l, None, Fraction(1, 2), tol), lhs, rhs, abs(lhs - rhs) / abs(rhs))]
    if suite is Suite.THM6:
        lhs = math.sqrt(2) / (2 * math.pi) * periods.omega_quadrature(2, 0.5).value
        rhs = ch.rational_binomial(Fraction(1, 4), Fraction(1, 2))
        return [_numeric(Case(suite, 2, None, Fraction(1, 2), tol), lhs, rhs, abs(lhs - rhs) / rhs)]
    if suite is Suite.KUMMER:
        kind, params = payload
        if kind == "family":
            l = params
            a, b = (l - 1) / l, 1 / l
            case = Case(suite, l, None, None, tol, (a, b))
            lhs = ch.hyp2f1(a, b, 1 + b - a, -1.0)
            rhs = ch.kummer_rhs(a, b)
            err = max(_rel(lhs, rhs), _rel(rhs, periods.half_lambda_binomial_ratio(l)))
            return [_numeric(case, lhs, rhs, err)]
        a, b = params
        case = Case(suite, None, None, None, tol, (a, b))
        lhs = ch.hyp2f1(a, b, 1 + b - a, -1.0)
        rhs = ch.kummer_rhs(a, b)
        return [_numeric(case, lhs, rhs, _rel(lhs, rhs))]
    if suite is Suite.PFAFF:
        kind, params = payload
        if kind == "family":
            l, z = params
            a, b, c = (l - 1) / l, 1 / l, 2 / l
            case = Case(suite, l, None, None, tol, (a, b, c, z))
        else:
            a, b, c, z = params
            case = Case(suite, None, None, None, tol, (a, b, c, z))
        lhs = ch.hyp2f1_series(a, b, c, z)
        rhs = ch.pfaff_rhs(a, b, c, z)
        return [_numeric(case, lhs, rhs, _rel(lhs, rhs))]
    # series vs integral
    a, b, c = payload
    reports = []
    for z in INTEGRAL_Z:
        case = Case(suite, None, None, None, tol, (float(a), float(b), float(c), z))
        lhs = ch.hyp2f1(float(a), float(b), float(c), z)
        rhs = ch.hyp2f1_integral(float(a), float(b), float(c), z)
        reports.append(_numeric(case, lhs, rhs, abs(lhs - rhs) / abs(lhs)))
    return reports


def _run_task(task: tuple) -> list[VerifyReport]:
    kind, suite, *rest = task
    t0 = time.perf_counter()
    if kind == "trace":
        reports = _task_trace_sweep(suite, *rest)
    elif kind == "half":
        reports = _task_half(suite, *rest)
    elif kind == "l3":
        reports = _task_l3_corollary(suite, *rest)
    elif kind == "greene":
        reports = _task_greene(suite, *rest)
    else:
        reports = _task_analytic(suite, *rest)
    ms = (time.perf_counter() - t0) * 1e3
    for r in reports:
        r.runtime_ms = ms / max(1, len(reports))
    return reports


# --- enumeration ----------------------------------------------------------


def _parse_suite(suite) -> Suite:
    try:
        return Suite(suite)
    except ValueError:
        raise InvalidConfig(f"unknown suite {suite!r}; choose from {[s.value for s in Suite]}") from None


def _enumerate(suite: Suite, p_max: int, l_set, lambda_spec, tol: float):
    """Split a suite into runnable tasks and immediate skip reports."""
    tasks: list[tuple] = []
    skips: list[VerifyReport] = []
    primes = odd_primes(p_max)

    def congruent(l, p):
        if p % l == 0 or l % p == 0:
            skips.append(_skip(Case(suite, l, p, None, tol), f"p divides l = {l}"))
            return False
        if (p - 1) % l:
            skips.append(_skip(Case(suite, l, p, None, tol), f"p != 1 mod {l}"))
            return False
        return True

    if suite in (Suite.THM4, Suite.COR_HASSE):
        for l in l_set:
            if suite is Suite.COR_HASSE and l < 3:
                skips.append(_skip(Case(suite, l, None, None, tol), "bound is stated for l >= 3"))
                continue
            for p in primes:
                if congruent(l, p):
                    tasks.append(("trace", suite, l, p, lambda_spec, tol))
    elif suite is Suite.THM2:
        for p in primes:
            tasks.append(("trace", suite, 2, p, lambda_spec, tol))
    elif suite in (Suite.THM5_TRACE, Suite.COR37):
        for l in l_set:
            for p in primes:
                if congruent(l, p):
                    tasks.append(("half", suite, l, p, tol))
    elif suite is Suite.THM6:
        tasks.append(("analytic", suite, (), tol))
        for p in primes:
            if congruent(4, p):
                tasks.append(("half", suite, 2, p, tol))
    elif suite in (Suite.COR_MINUS1, Suite.COR_HALF_CHAR):
        for p in primes:
            if congruent(3, p):
                tasks.append(("l3", suite, p, tol))
    elif suite in ORACLE_SUITES:
        for p in primes:
            tasks.append(("greene", suite, p, tol))
    elif suite is Suite.THM1:
        for lam in lambda_spec:
            tasks.append(("analytic", suite, (lam,), tol))
    elif suite is Suite.THM3:
        for l in l_set:
            for lam in lambda_spec:
                tasks.append(("analytic", suite, (l, lam), tol))
    elif suite is Suite.THM5_PERIOD:
        for l in l_set:
            tasks.append(("analytic", suite, (l,), tol))
    elif suite is Suite.KUMMER:
        for l in l_set:
            tasks.append(("analytic", suite, ("family", l), tol))
        for ab in _random_grid("kummer"):
            tasks.append(("analytic", suite, ("random", ab), tol))
    elif suite is Suite.PFAFF:
        for l in l_set:
            for z in PFAFF_Z:
                tasks.append(("analytic", suite, ("family", (l, z)), tol))
        for params in _random_grid("pfaff"):
            tasks.append(("analytic", suite, ("random", params), tol))
    elif suite is Suite.SERIES_INTEGRAL:
        for a in INTEGRAL_VALUES:
            for b in INTEGRAL_VALUES:
                for c in INTEGRAL_VALUES:
                    if c > b:
                        tasks.append(("analytic", suite, (a, b, c), tol))
    return tasks, skips


def _sort_key(r: VerifyReport):
    c = r.case
    return (
        -1 if c.l is None else c.l,
        -1 if c.p is None else c.p,
        (0, 0) if c.lam is None else (1, c.lam),
        r.seq,
    )


def run_suite(
    suite,
    p_max: int | None = None,
    l_set=None,
    lambda_spec=None,
    jobs: int = 1,
    tol: float | None = None,
) -> list[VerifyReport]:
    """Run one verification suite and return its reports sorted by ``(l, p, lambda)``.

    ``lambda_spec`` is ``"all"`` (every good residue) or a list of rationals;
    ``None`` picks the suite default. Suites that pin ``lambda`` (1/2 or -1)
    ignore it. Exact suites ignore ``tol``.
    """
    suite = _parse_suite(suite)
    if p_max is None:
        p_max = DEFAULT_P_MAX_ORACLE if suite in ORACLE_SUITES else DEFAULT_P_MAX
    if p_max < 5:
        raise InvalidConfig("p_max must be at least 5")
    if l_set is None:
        l_set = DEFAULT_L.get(suite, ())
    l_set = tuple(sorted(set(int(l) for l in l_set)))
    if any(l < 2 or l > 12 for l in l_set):
        raise InvalidConfig("l values must lie in 2..12")
    if lambda_spec is None:
        lambda_spec = LAMBDA_GRID if suite in (Suite.THM1, Suite.THM3) else "all"
    if lambda_spec != "all":
        lambda_spec = tuple(Fraction(v) for v in lambda_spec)
        if suite in (Suite.THM1, Suite.THM3) and any(not 0 < v < 1 for v in lambda_spec):
            raise InvalidConfig("period suites need 0 < lambda < 1")
        if any(v in (0, 1) for v in lambda_spec):
            raise InvalidConfig("lambda must avoid 0 and 1")
    elif suite in (Suite.THM1, Suite.THM3):
        raise InvalidConfig("period suites need an explicit lambda list")
    if jobs < 1:
        raise InvalidConfig("jobs must be positive")
    if tol is None:
        tol = DEFAULT_TOL.get(suite, 0.0)
    if suite in EXACT_SUITES:
        tol = 0.0

    tasks, reports = _enumerate(suite, p_max, l_set, lambda_spec, tol)
    if jobs == 1 or len(tasks) <= 1:
        results = [_run_task(t) for t in tasks]
    else:
        ctx = multiprocessing.get_context("spawn")
        with ProcessPoolExecutor(max_workers=jobs, mp_context=ctx) as pool:
            results = list(pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (8 * jobs))))
    seq = 0
    for group in results:
        for r in group:
            r.seq = seq
            seq += 1
            reports.append(r)
    reports.sort(key=_sort_key)
    return reports


def run_all(jobs: int = 1, **overrides) -> list[VerifyReport]:
    out = []
    for suite in Suite:
        out.extend(run_suite(suite, jobs=jobs, **overrides))
    return out


# --- output ---------------------------------------------------------------


def exit_code(reports) -> int:
    return 1 if any(r.status is Status.FAIL for r in reports) else 0


def _num(v):
    if v is None:
        return None
    v = float(v)
    return v if math.isfinite(v) else None


def _row(r: VerifyReport, timing: bool) -> dict:
    c = r.case
    lhs = r.lhs
    if lhs is None:
        re_, im_ = None, None
    else:
        z = complex(lhs)
        re_, im_ = _num(z.real), _num(z.imag)
    rhs = r.rhs
    if isinstance(rhs, complex):
        # the schema has one real rhs column; abs_err keeps the complex distance
        rhs = rhs.real
    if rhs is not None and not isinstance(rhs, (int, np.integer)):
        rhs = _num(rhs)
    elif rhs is not None:
        rhs = int(rhs)
    return {
        "suite": c.suite.value,
        "l": c.l,
        "p": c.p,
        "lambda_num": None if c.lam is None else c.lam.numerator,
        "lambda_den": None if c.lam is None else c.lam.denominator,
        "lhs_re": re_,
        "lhs_im": im_,
        "rhs": rhs,
        "abs_err": _num(r.abs_err),
        "status": r.status.value,
        "runtime_ms": round(r.runtime_ms, 3) if timing else 0.0,
    }


def summary_line(reports) -> str:
    n = {s: 0 for s in Status}
    for r in reports:
        n[r.status] += 1
    return f"{n[Status.PASS]} pass / {n[Status.FAIL]} fail / {n[Status.SKIPPED]} skipped"


def emit_report(reports, format: str = "text", timing: bool = True) -> str:
    """Render reports as ``json``, ``csv`` or an aligned ``text`` table."""
    rows = [_row(r, timing) for r in reports]
    if format == "json":
        return json.dumps(rows, indent=1) + "\n"
    if format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({k: "" if v is None else v for k, v in row.items()})
        return buf.getvalue()
    if format != "text":
        raise InvalidConfig(f"unknown format {format!r}")
    head = ("suite", "l", "p", "lambda", "lhs", "rhs", "abs_err", "status", "note")
    table = [head]
    for r, row in zip(reports, rows):
        lam = "" if r.case.lam is None else str(r.case.lam)
        lhs = "" if row["lhs_re"] is None else f"{row['lhs_re']:.12g}"
        if row["lhs_im"]:
            lhs += f"{row['lhs_im']:+.3g}j"
        rhs = "" if row["rhs"] is None else (f"{row['rhs']:.12g}" if isinstance(row["rhs"], float) else str(row["rhs"]))
        err = "" if row["abs_err"] is None else f"{row['abs_err']:.3g}"
        note = r.reason or (" ".join(f"{v:g}" for v in r.case.extra) if r.case.extra else "")
        table.append(
            (row["suite"], str(row["l"] or ""), str(row["p"] or ""), lam, lhs, rhs, err, row["status"], note)
        )
    widths = [max(len(t[i]) for t in table) for i in range(len(head))]
    lines = ["  ".join(cell.ljust(wd) for cell, wd in zip(t, widths)).rstrip() for t in table]
    lines.append(summary_line(reports))
    return "\n".join(lines) + "\n"
