"""Weighted quadrature: integrate the piecewise Taylor approximant against rho.

This is the q = 1 application; its worst-case error coincides with the
rho-weighted L1 approximation error, so the convergence harness checks the
n^{-r} rate directly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional

from .approx import build_taylor
from .core import FunctionWithDerivatives, ProblemExponents, WeightFunction
from .errors import NonConvergence, ParameterOutOfRange, WrongExponent
from .numerics import DEFAULT_TOL, Interval, Tolerance, integrate
from .quantizer import KnotVector, knots_halfline, knots_realline

__all__ = ["QuadratureResult", "StudyRow", "integrate_weighted", "convergence_study"]


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    n: int
    rule: str
    error_vs_reference: Optional[float] = None

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise NonConvergence(f"quadrature value is {self.value}")
        if self.error_vs_reference is not None and not self.error_vs_reference >= 0.0:
            raise ParameterOutOfRange("error_vs_reference must be nonnegative")


@dataclass(frozen=True)
class StudyRow:
    n: int
    error: float
    order: Optional[float]


def _knots_for_domain(kappa: WeightFunction, alpha: float, n: int, iv: Interval, tol: Tolerance) -> KnotVector:
    if iv.lo == 0.0 and iv.hi == math.inf:
        return knots_halfline(kappa, alpha, n, tol)
    if iv.lo == -math.inf and iv.hi == math.inf:
        return knots_realline(kappa, alpha, n, tol)
    raise ParameterOutOfRange(
        f"weighted quadrature covers the half line and the real line, got [{iv.lo}, {iv.hi}]"
    )


def integrate_weighted(
    f: FunctionWithDerivatives,
    rho: WeightFunction,
    psi: WeightFunction,
    kappa: WeightFunction,
    exps: ProblemExponents,
    n: int,
    tol: Tolerance = DEFAULT_TOL,
) -> QuadratureResult:
    """∫ (T_n f) rho over f's domain, cell by cell on the equal-mass knots."""
    if exps.q != 1.0:
        raise WrongExponent(f"weighted quadrature is the q = 1 case, got q = {exps.q}")
    kv = _knots_for_domain(kappa, exps.alpha, n, f.domain, tol)
    P = build_taylor(f, kv, exps.r)
    log_rho = rho.log_at
    total = 0.0
    for i, (a, b) in enumerate(kv.cells()):
        def integrand(x: float, i=i) -> float:
            return P.cell_value(i, x) * math.exp(log_rho(x))

        total += integrate(integrand, Interval(a, b), tol).value
    rule = f"piecewise-taylor r={exps.r} cells={kv.n_cells}"
    return QuadratureResult(value=total, n=n, rule=rule)


def _reference_value(
    f: FunctionWithDerivatives, rho: WeightFunction, iv: Interval
) -> float:
    """Direct high-accuracy ∫ f rho with a two-tolerance stability cross-check."""
    log_rho = rho.log_at

    def integrand(x: float) -> float:
        return f(x) * math.exp(log_rho(x))

    fine = integrate(integrand, iv, Tolerance(rel=1e-12, abs=1e-15, max_subdivisions=4000)).value
    coarse = integrate(integrand, iv, Tolerance(rel=1e-9, abs=1e-12)).value
    if abs(fine - coarse) > 1e-7 * max(1.0, abs(fine)):
        raise NonConvergence(
            f"reference integral unstable across tolerances: {fine!r} vs {coarse!r}"
        )
    return fine


def convergence_study(
    f: FunctionWithDerivatives,
    rho: WeightFunction,
    psi: WeightFunction,
    kappa: WeightFunction,
    exps: ProblemExponents,
    n_list,
    tol: Tolerance = DEFAULT_TOL,
) -> List[StudyRow]:
    """Errors against a direct reference and successive-ratio orders.

    Orders are log(e_prev/e_cur)/log(n_cur/n_prev); rows whose error sits at
    the noise floor are flagged with order None rather than reported.
    """
    ns = [int(n) for n in n_list]
    if any(n < 1 for n in ns) or len(ns) < 1:
        raise ParameterOutOfRange("n_list must contain positive integers")
    reference = _reference_value(f, rho, f.domain)
    floor = 1e-13 * max(1.0, abs(reference))
    rows: List[StudyRow] = []
    prev: Optional[StudyRow] = None
    for n in ns:
        res = integrate_weighted(f, rho, psi, kappa, exps, n, tol)
        err = abs(res.value - reference)
        order: Optional[float] = None
        if (
            prev is not None
            and prev.error > floor
            and err > floor
            and n != prev.n
        ):
            order = math.log(prev.error / err) / math.log(n / prev.n)
        row = StudyRow(n=n, error=err, order=order)
        rows.append(row)
        prev = row
    return rows
