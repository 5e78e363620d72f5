"""Command line surface: knot emission, approximation demos, weighted
integration, convergence studies, penalty factors, reference tables, and the
Gaussian-variance example curve.

Every run echoes its fully resolved configuration: CSV output carries a
``# config: {...}`` header line, JSON output a ``config`` key. Exit codes:
0 success, 2 parameter errors, 3 numerical non-convergence.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys
from typing import Dict, List, Optional

from . import _golden
from ._kernels import BACKEND
from .approx import approximation_error, build_lagrange, build_taylor, eval_piecewise
from .core import (
    ConstantOne,
    ExponentialKernel,
    ExponentialShape,
    ExponentialShapeB,
    FunctionWithDerivatives,
    GaussianDensity,
    GaussianShape,
    LogNormalDensity,
    LogNormalQuantizer,
    LogisticDensity,
    ProblemExponents,
    StudentDensity,
    StudentQuantizer,
    StudentShape,
)
from .errors import (
    DomainError,
    InfiniteFactor,
    MissingDerivative,
    MonotonicityUndeclared,
    NonConvergence,
    NonIntegrableQuantizer,
    NoSignChange,
    OutOfSpan,
    ParameterOutOfRange,
    WrongExponent,
)
from .factor import (
    fctr_bound_logistic,
    fctr_bound_student,
    fctr_example_gaussian_variance,
    fctr_gauss_exp,
    fctr_gauss_gauss,
    fctr_lognormal_int,
    fctr_lognormal_pleq,
    fctr_numeric,
)
from .numerics import DEFAULT_TOL, HALF_LINE, REAL_LINE, Interval, Tolerance
from .quadrature import _reference_value, convergence_study, integrate_weighted
from .quantizer import knots_halfline, knots_lognormal, knots_realline

_PARAMETER_ERRORS = (
    ParameterOutOfRange,
    MonotonicityUndeclared,
    WrongExponent,
    MissingDerivative,
    OutOfSpan,
    DomainError,
    NoSignChange,
)
_NUMERICAL_ERRORS = (NonConvergence, NonIntegrableQuantizer, InfiniteFactor)

_BUILTINS = {
    "exp-decay": (
        lambda x: math.exp(-x),
        lambda x: -math.exp(-x),
        lambda x: math.exp(-x),
        lambda x: -math.exp(-x),
    ),
    "gauss": (
        lambda x: math.exp(-x * x),
        lambda x: -2.0 * x * math.exp(-x * x),
        lambda x: (4.0 * x * x - 2.0) * math.exp(-x * x),
        lambda x: (12.0 * x - 8.0 * x**3) * math.exp(-x * x),
    ),
    "sin-exp": (
        lambda x: math.sin(x) * math.exp(-x),
        lambda x: math.exp(-x) * (math.cos(x) - math.sin(x)),
        lambda x: -2.0 * math.exp(-x) * math.cos(x),
        lambda x: 2.0 * math.exp(-x) * (math.cos(x) + math.sin(x)),
    ),
    "runge": (
        lambda x: 1.0 / (1.0 + x * x),
        lambda x: -2.0 * x / (1.0 + x * x) ** 2,
        lambda x: (6.0 * x * x - 2.0) / (1.0 + x * x) ** 3,
        lambda x: 24.0 * x * (1.0 - x * x) / (1.0 + x * x) ** 4,
    ),
}


def _exponent(text: str) -> float:
    if text.lower() in ("inf", "infinity"):
        return math.inf
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number or 'inf': {text!r}")


def _fmt(v: float) -> str:
    if v == math.inf:
        return "inf"
    if v == -math.inf:
        return "-inf"
    return repr(float(v))


def _jsonable(obj):
    if isinstance(obj, float):
        if math.isnan(obj):
            return "nan"
        if obj == math.inf:
            return "inf"
        if obj == -math.inf:
            return "-inf"
        return obj
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (str, int, bool)) or obj is None:
        return obj
    return str(obj)


def _config_of(args: argparse.Namespace) -> Dict:
    cfg = {k: v for k, v in vars(args).items() if k != "handler"}
    return _jsonable(cfg)


def _config_line(args: argparse.Namespace) -> str:
    return "# config: " + json.dumps(_config_of(args), sort_keys=True)


def _emit_json(args: argparse.Namespace, payload: Dict) -> None:
    body = {"config": _config_of(args)}
    body.update(_jsonable(payload))
    print(json.dumps(body, sort_keys=True, indent=2))


def _tolerance(args: argparse.Namespace) -> Tolerance:
    return Tolerance(rel=args.tol_rel, abs=args.tol_abs)


def _domain_of(args: argparse.Namespace) -> Interval:
    return REAL_LINE if args.domain == "real" else HALF_LINE


def _builtin_function(name: str, domain: Interval) -> FunctionWithDerivatives:
    return FunctionWithDerivatives(_BUILTINS[name], domain)


def _quantizer_of(args: argparse.Namespace, domain: Interval):
    kind = args.quantizer
    if kind in ("exp", "student") and args.a is None:
        raise ParameterOutOfRange(f"quantizer {kind!r} needs --a")
    if kind == "exp":
        return ExponentialKernel(args.a, domain)
    if kind == "gauss":
        return GaussianDensity(args.sigma, 0.0, domain)
    if kind == "student":
        return StudentQuantizer(args.a, domain)
    if kind == "lognormal":
        if domain != HALF_LINE:
            raise ParameterOutOfRange("the log-normal quantizer lives on the half line")
        if args.c is None:
            raise ParameterOutOfRange("the log-normal quantizer needs --c")
        return LogNormalQuantizer(args.c, args.mu)
    raise ParameterOutOfRange(f"unknown quantizer {kind!r}")


def _rho_of(args: argparse.Namespace, domain: Interval):
    kind = args.rho
    if kind == "gauss":
        return GaussianDensity(args.rho_sigma, 0.0, domain)
    if kind == "exp":
        return ExponentialKernel(args.rho_a, domain)
    if kind == "one":
        return ConstantOne(domain)
    if kind == "logistic":
        return LogisticDensity(args.rho_nu)
    if kind == "student":
        return StudentDensity(args.rho_nu)
    if kind == "lognormal":
        return LogNormalDensity(args.rho_mu, args.rho_sigma)
    raise ParameterOutOfRange(f"unknown weight {kind!r}")


def _psi_of(args: argparse.Namespace, domain: Interval):
    kind = args.psi
    if kind == "one":
        return ConstantOne(domain)
    if kind == "gauss-shape":
        return GaussianShape(args.psi_lam)
    if kind == "exp-shape":
        return ExponentialShape(args.psi_lam)
    if kind == "exp-rate":
        return ExponentialShapeB(args.psi_b)
    if kind == "student-shape":
        return StudentShape(args.psi_nu, args.psi_b)
    raise ParameterOutOfRange(f"unknown shape {kind!r}")


def _knot_vector(args: argparse.Namespace, kappa, alpha: float, domain: Interval, tol: Tolerance):
    if args.quantizer == "lognormal":
        return knots_lognormal(args.c, alpha, args.mu, args.n)
    if domain == HALF_LINE:
        return knots_halfline(kappa, alpha, args.n, tol)
    return knots_realline(kappa, alpha, args.n, tol)


def cmd_knots(args: argparse.Namespace) -> int:
    domain = _domain_of(args)
    kappa = _quantizer_of(args, domain)
    kv = _knot_vector(args, kappa, args.alpha, domain, _tolerance(args))
    print(_config_line(args))
    print("index,knot")
    start = 0 if domain == HALF_LINE else -(len(kv.knots) // 2)
    for offset, x in enumerate(kv.knots):
        print(f"{start + offset},{_fmt(x)}")
    return 0


def cmd_approximate(args: argparse.Namespace) -> int:
    domain = _domain_of(args)
    f = _builtin_function(args.function, domain)
    exps = ProblemExponents(args.p, args.q, args.r)
    tol = _tolerance(args)
    kappa = _quantizer_of(args, domain)
    rho = _rho_of(args, domain)
    kv = _knot_vector(args, kappa, exps.alpha, domain, tol)
    if args.form == "taylor":
        P = build_taylor(f, kv, args.r)
    else:
        P = build_lagrange(f, kv, args.r)
    error = approximation_error(f, P, rho, args.q, tol)
    rng = random.Random(args.seed)
    finite = [x for x in kv.knots if math.isfinite(x)]
    lo, hi = min(finite), max(finite)
    probe_max = 0.0
    for _ in range(args.probes):
        x = lo + (hi - lo) * rng.random()
        probe_max = max(probe_max, abs(f(x) - eval_piecewise(P, x)))
    _emit_json(
        args,
        {
            "backend": BACKEND,
            "n_cells": kv.n_cells,
            "error": error,
            "probe_max_abs_deviation": probe_max,
        },
    )
    return 0


def cmd_integrate(args: argparse.Namespace) -> int:
    domain = _domain_of(args)
    f = _builtin_function(args.function, domain)
    exps = ProblemExponents(args.p, 1, args.r)
    tol = _tolerance(args)
    kappa = _quantizer_of(args, domain)
    rho = _rho_of(args, domain)
    res = integrate_weighted(f, rho, ConstantOne(domain), kappa, exps, args.n, tol)
    reference = _reference_value(f, rho, domain)
    _emit_json(
        args,
        {
            "value": res.value,
            "n": res.n,
            "rule": res.rule,
            "reference": reference,
            "error_vs_reference": abs(res.value - reference),
        },
    )
    return 0


def cmd_convergence(args: argparse.Namespace) -> int:
    domain = _domain_of(args)
    f = _builtin_function(args.function, domain)
    exps = ProblemExponents(args.p, 1, args.r)
    tol = _tolerance(args)
    kappa = _quantizer_of(args, domain)
    rho = _rho_of(args, domain)
    n_list = [int(s) for s in args.n_list.split(",") if s]
    rows = convergence_study(f, rho, ConstantOne(domain), kappa, exps, n_list, tol)
    print(_config_line(args))
    print("n,error,order")
    for row in rows:
        order = "" if row.order is None else repr(row.order)
        print(f"{row.n},{_fmt(row.error)},{order}")
    return 0


def _exps_for_alpha(alpha: float) -> ProblemExponents:
    """A p <= q exponent triple whose combined exponent equals alpha."""
    if alpha == int(alpha) and alpha >= 1:
        return ProblemExponents(math.inf, math.inf, int(alpha))
    r = math.ceil(alpha)
    return ProblemExponents(1, 1.0 / (alpha - r + 1.0), r)


def _numeric_report(args: argparse.Namespace, closed) -> Optional[Dict]:
    """Route the family through the numeric path for cross-checking."""
    fam = args.family
    tol = _tolerance(args)
    if fam == "gauss-gauss":
        exps = _require_exps(args)
        a = closed.params["a"]
        rep = fctr_numeric(
            GaussianDensity(args.sigma), GaussianShape(args.lam), ExponentialKernel(a), exps, tol
        )
    elif fam == "gauss-exp":
        exps = _require_exps(args)
        a = closed.params["a"]
        rep = fctr_numeric(
            GaussianDensity(args.sigma), ExponentialShape(args.lam), ExponentialKernel(a), exps, tol
        )
    elif fam == "lognormal":
        c = closed.params["c"]
        if closed.params.get("case") == "int":
            if args.alpha != int(args.alpha):
                raise ParameterOutOfRange(
                    "numeric cross-check of the integration case needs integer alpha"
                )
            exps = ProblemExponents(math.inf, 1, int(args.alpha) - 1)
        else:
            exps = _exps_for_alpha(args.alpha)
        rep = fctr_numeric(
            LogNormalDensity(args.mu, args.sigma),
            ConstantOne(HALF_LINE),
            LogNormalQuantizer(c, args.mu),
            exps,
            tol,
        )
    elif fam == "logistic":
        exps = _exps_for_alpha(args.alpha)
        rep = fctr_numeric(
            LogisticDensity(1.0 / args.lam),
            ExponentialShapeB(args.b),
            ExponentialKernel(closed.params["a"]),
            exps,
            tol,
        )
    elif fam == "student":
        exps = _exps_for_alpha(args.alpha)
        rep = fctr_numeric(
            StudentDensity(args.nu),
            StudentShape(args.nu, args.b),
            StudentQuantizer(closed.params["a"]),
            exps,
            tol,
        )
    elif fam == "example1":
        rep = fctr_numeric(
            GaussianDensity(1.0),
            ConstantOne(),
            GaussianDensity(math.sqrt(args.sigma2)),
            ProblemExponents(math.inf, 1, 1),
            tol,
        )
    else:
        return None
    return {
        "e_pq": rep.e_pq,
        "kappa_mass_alpha": rep.kappa_mass_alpha,
        "omega_mass_alpha": rep.omega_mass_alpha,
        "fctr": rep.fctr,
        "kind": rep.kind,
    }


def _require_exps(args: argparse.Namespace) -> ProblemExponents:
    if args.p is None or args.q is None or args.r is None:
        raise ParameterOutOfRange(f"family {args.family!r} needs --p, --q and --r")
    return ProblemExponents(args.p, args.q, args.r)


def cmd_fctr(args: argparse.Namespace) -> int:
    fam = args.family
    a = None if args.optimize else args.a
    if fam == "gauss-gauss":
        rep = fctr_gauss_gauss(args.sigma, args.lam, _require_exps(args), a)
    elif fam == "gauss-exp":
        rep = fctr_gauss_exp(args.sigma, args.lam, _require_exps(args), a)
    elif fam == "lognormal":
        if args.case == "sup":
            rep = fctr_lognormal_pleq(args.sigma, args.mu, args.alpha)
        else:
            c = None if args.optimize else args.c
            rep = fctr_lognormal_int(args.sigma, args.mu, args.alpha, c)
        rep.params["case"] = args.case
    elif fam == "logistic":
        rep = fctr_bound_logistic(args.lam, args.b, args.alpha, a)
    elif fam == "student":
        exps = None
        if args.p is not None and args.q is not None and args.r is not None:
            exps = ProblemExponents(args.p, args.q, args.r)
        rep = fctr_bound_student(args.nu, args.b, args.alpha, a, exps)
    elif fam == "example1":
        value = fctr_example_gaussian_variance(args.sigma2)
        payload = {"fctr": value, "kind": "exact-closed-form"}
        if args.numeric:
            payload["numeric"] = _numeric_report(args, None)
        _emit_json(args, payload)
        return 0
    elif fam == "generic":
        domain = _domain_of(args)
        rep = fctr_numeric(
            _rho_of(args, domain),
            _psi_of(args, domain),
            _quantizer_of(args, domain),
            _require_exps(args),
            _tolerance(args),
        )
    else:
        raise ParameterOutOfRange(f"unknown family {fam!r}")
    payload = {
        "e_pq": rep.e_pq,
        "kappa_mass_alpha": rep.kappa_mass_alpha,
        "omega_mass_alpha": rep.omega_mass_alpha,
        "fctr": rep.fctr,
        "kind": rep.kind,
        "params": rep.params,
    }
    if args.numeric and fam != "generic":
        payload["numeric"] = _numeric_report(args, rep)
    _emit_json(args, payload)
    return 0


def _table_lines(name: str) -> List[str]:
    table = next(t for t in _golden.REFERENCE_TABLES if t.name == name)
    computed = _golden.compute_table(name)
    lines = [f"# table: {name}", "row,col,computed,rounded,reference,match"]
    for cell in table.cells:
        value = computed[(cell.row, cell.col)]
        rounded = _golden.round3(value)
        match = "yes" if rounded == cell.printed else "no"
        lines.append(f"{cell.row},{cell.col},{_fmt(value)},{rounded},{cell.printed},{match}")
    return lines


def cmd_tables(args: argparse.Namespace) -> int:
    names = [t.name for t in _golden.REFERENCE_TABLES]
    if args.table is not None:
        if args.table not in names:
            raise ParameterOutOfRange(f"unknown table {args.table!r}; choices: {names}")
        names = [args.table]
    if args.outdir is not None:
        os.makedirs(args.outdir, exist_ok=True)
        for name in names:
            path = os.path.join(args.outdir, f"{name}.csv")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(_config_line(args) + "\n")
                fh.write("\n".join(_table_lines(name)) + "\n")
            print(path)
        return 0
    print(_config_line(args))
    for name in names:
        for line in _table_lines(name):
            print(line)
    return 0


def cmd_example1_curve(args: argparse.Namespace) -> int:
    lo, hi, count = args.grid
    if not (lo > 0.0 and hi > lo and count >= 2):
        raise ParameterOutOfRange("grid must satisfy 0 < start < stop with count >= 2")
    print(_config_line(args))
    print("sigma2,fctr")
    for i in range(int(count)):
        s2 = lo + (hi - lo) * i / (count - 1)
        print(f"{_fmt(s2)},{_fmt(fctr_example_gaussian_variance(s2))}")
    return 0


def _grid_spec(text: str):
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("grid must be start:stop:count")
    return float(parts[0]), float(parts[1]), int(parts[2])


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol-rel", type=float, default=DEFAULT_TOL.rel, help="relative tolerance")
    p.add_argument("--tol-abs", type=float, default=DEFAULT_TOL.abs, help="absolute tolerance")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized probes")


def _add_quantizer(p: argparse.ArgumentParser) -> None:
    p.add_argument("--quantizer", choices=("exp", "gauss", "lognormal", "student"), default="exp")
    p.add_argument("--a", type=float, default=1.0, help="decay rate of the exp/student quantizer")
    p.add_argument("--c", type=float, default=2.0, help="log-normal quantizer exponent")
    p.add_argument("--mu", type=float, default=0.0, help="log-normal location")
    p.add_argument("--sigma", type=float, default=1.0, help="Gaussian quantizer scale")
    p.add_argument("--domain", choices=("real", "half"), default="real")


def _add_rho(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--rho",
        choices=("gauss", "exp", "one", "logistic", "student", "lognormal"),
        default="gauss",
        help="weight the error is measured against",
    )
    p.add_argument("--rho-sigma", type=float, default=1.0)
    p.add_argument("--rho-a", type=float, default=1.0)
    p.add_argument("--rho-nu", type=float, default=3.0)
    p.add_argument("--rho-mu", type=float, default=0.0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qknots",
        description="Quantizer-based knots, weighted approximation and integration, "
        "and mismatch penalty factors on unbounded domains.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("knots", help="emit equal-mass knots as CSV")
    _add_common(p)
    _add_quantizer(p)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_knots)

    p = sub.add_parser("approximate", help="piecewise approximation demo on a built-in function")
    _add_common(p)
    _add_quantizer(p)
    _add_rho(p)
    p.add_argument("--function", choices=sorted(_BUILTINS), required=True)
    p.add_argument("--form", choices=("taylor", "lagrange"), default="taylor")
    p.add_argument("--p", type=_exponent, required=True)
    p.add_argument("--q", type=_exponent, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--probes", type=int, default=64, help="random probe points to report")
    p.set_defaults(handler=cmd_approximate)

    p = sub.add_parser("integrate", help="weighted integration via piecewise Taylor")
    _add_common(p)
    _add_quantizer(p)
    _add_rho(p)
    p.add_argument("--function", choices=sorted(_BUILTINS), required=True)
    p.add_argument("--p", type=_exponent, default=math.inf)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_integrate)

    p = sub.add_parser("convergence", help="error vs n study against a direct reference")
    _add_common(p)
    _add_quantizer(p)
    _add_rho(p)
    p.add_argument("--function", choices=sorted(_BUILTINS), required=True)
    p.add_argument("--p", type=_exponent, default=math.inf)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n-list", default="8,16,32,64", help="comma-separated n values")
    p.set_defaults(handler=cmd_convergence)

    p = sub.add_parser("fctr", help="mismatch penalty factor for a named family")
    _add_common(p)
    p.add_argument(
        "--family",
        choices=("gauss-gauss", "gauss-exp", "lognormal", "logistic", "student",
                 "example1", "generic"),
        required=True,
    )
    p.add_argument("--sigma", type=float, default=1.0, help="density scale (closed-form families)")
    p.add_argument("--lam", type=float, default=2.0, help="shape rate (closed-form families)")
    p.add_argument("--mu", type=float, default=0.0, help="log-normal location")
    p.add_argument("--nu", type=float, default=3.0, help="student degrees of freedom")
    p.add_argument("--b", type=float, default=1.0, help="shape offset (logistic/student bounds)")
    p.add_argument("--alpha", type=float, default=1.0, help="quantizer exponent for bound families")
    p.add_argument("--sigma2", type=float, default=1.0, help="variance for --family example1")
    p.add_argument("--a", type=float, default=None, help="quantizer rate; omit to optimize")
    p.add_argument("--c", type=float, default=None, help="log-normal exponent; omit to optimize")
    p.add_argument("--case", choices=("sup", "int"), default="sup",
                   help="log-normal family: supremum case or integration case")
    p.add_argument("--p", type=_exponent, default=None)
    p.add_argument("--q", type=_exponent, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--optimize", action="store_true", help="search the free quantizer parameter")
    p.add_argument("--numeric", action="store_true", help="cross-check via the numeric path")
    p.add_argument("--quantizer", choices=("exp", "gauss", "lognormal", "student"), default="exp",
                   help="generic family only")
    p.add_argument("--domain", choices=("real", "half"), default="real")
    _add_rho(p)
    p.add_argument("--psi", choices=("one", "gauss-shape", "exp-shape", "exp-rate",
                                     "student-shape"), default="one")
    p.add_argument("--psi-lam", type=float, default=2.0)
    p.add_argument("--psi-b", type=float, default=1.0)
    p.add_argument("--psi-nu", type=float, default=3.0)
    p.set_defaults(handler=cmd_fctr)

    p = sub.add_parser("tables", help="recompute the reference tables as CSV")
    _add_common(p)
    p.add_argument("--table", default=None, help="emit only this table")
    p.add_argument("--outdir", default=None, help="write one CSV file per table here")
    p.set_defaults(handler=cmd_tables)

    p = sub.add_parser("example1-curve", help="penalty of a Gaussian quantizer vs its variance")
    _add_common(p)
    p.add_argument("--grid", type=_grid_spec, default=(0.25, 4.0, 76),
                   help="start:stop:count for the variance grid")
    p.set_defaults(handler=cmd_example1_curve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except _PARAMETER_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _NUMERICAL_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
