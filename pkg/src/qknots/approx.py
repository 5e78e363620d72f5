"""Piecewise polynomial approximants on a knot vector, and weighted norms.

Each cell carries a local polynomial in powers of (x - anchor). Cells that
extend to -inf, and more generally cells lying in the negative half-axis,
anchor at their right endpoint so the construction mirrors the half-line one
under x -> -x; all other cells anchor at their left endpoint. Evaluation is
left-closed/right-open at interior knots.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from ._kernels import piecewise_many, piecewise_scalar
from .core import FunctionWithDerivatives, WeightFunction
from .errors import MissingDerivative, OutOfSpan, ParameterOutOfRange
from .numerics import DEFAULT_TOL, Interval, Tolerance, integrate, sup_on
from .quantizer import KnotVector

__all__ = [
    "PiecewisePolynomial",
    "build_taylor",
    "build_lagrange",
    "eval_piecewise",
    "eval_piecewise_many",
    "weighted_Lq_norm",
    "smoothness_seminorm",
    "approximation_error",
]


@dataclass(frozen=True)
class PiecewisePolynomial:
    """Per-cell polynomials of degree < r over the cells of a knot vector."""

    kv: KnotVector
    anchors: Tuple[float, ...]
    coeffs: Tuple[Tuple[float, ...], ...]
    form: str
    r: int

    def __post_init__(self):
        m = self.kv.n_cells
        if len(self.anchors) != m or len(self.coeffs) != m:
            raise ParameterOutOfRange("one anchor and one coefficient row per cell required")
        if any(len(row) != self.r for row in self.coeffs):
            raise ParameterOutOfRange("each cell needs exactly r coefficients")
        object.__setattr__(self, "_knots_arr", np.asarray(self.kv.knots, dtype=np.float64))
        object.__setattr__(self, "_anchors_arr", np.asarray(self.anchors, dtype=np.float64))
        object.__setattr__(self, "_coeffs_arr", np.asarray(self.coeffs, dtype=np.float64))

    def cell_value(self, i: int, x: float) -> float:
        """Evaluate cell i's polynomial at x without locating the cell."""
        t = x - self.anchors[i]
        acc = 0.0
        for c in reversed(self.coeffs[i]):
            acc = acc * t + c
        return acc


def _anchor_right(a: float, b: float) -> bool:
    return a == -math.inf or b <= 0.0


def build_taylor(f: FunctionWithDerivatives, kv: KnotVector, r: int) -> PiecewisePolynomial:
    """Per-cell truncated Taylor expansion of f of degree r-1 at the cell anchor."""
    if not (isinstance(r, int) and r >= 1):
        raise ParameterOutOfRange(f"r must be a positive integer, got {r}")
    if f.orders < r:
        raise MissingDerivative(
            f"piecewise Taylor of degree {r - 1} needs derivatives 0..{r - 1}, got 0..{f.orders - 1}"
        )
    derivs = [f.derivative(k) for k in range(r)]
    factorials = [math.factorial(k) for k in range(r)]
    anchors = []
    coeffs = []
    for a, b in kv.cells():
        anchor = b if _anchor_right(a, b) else a
        if not math.isfinite(anchor):
            raise ParameterOutOfRange(f"cell [{a}, {b}] has no finite endpoint to anchor at")
        anchors.append(anchor)
        coeffs.append(tuple(derivs[k](anchor) / factorials[k] for k in range(r)))
    return PiecewisePolynomial(kv=kv, anchors=tuple(anchors), coeffs=tuple(coeffs), form="taylor", r=r)


def _cgl_nodes(a: float, b: float, r: int) -> Tuple[float, ...]:
    if r == 1:
        return (0.5 * (a + b),)
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    # Chebyshev-Gauss-Lobatto points, ascending
    return tuple(mid + half * math.cos(math.pi * (r - 1 - j) / (r - 1)) for j in range(r))


def _tail_nodes(edge: float, width: float, r: int, direction: float) -> Tuple[float, ...]:
    w = width if width > 0.0 and math.isfinite(width) else 1.0
    offs = [w * (2.0**j - 1.0) for j in range(r)]
    pts = [edge + direction * o for o in offs]
    return tuple(sorted(pts))


def _newton_to_power(ts: Tuple[float, ...], vals: Tuple[float, ...], r: int) -> Tuple[float, ...]:
    """Coefficients (ascending) of the interpolant through (ts[j], vals[j]) in powers of t."""
    dd = list(vals)
    for lvl in range(1, r):
        for j in range(r - 1, lvl - 1, -1):
            dd[j] = (dd[j] - dd[j - 1]) / (ts[j] - ts[j - lvl])
    # Horner on the Newton form: p <- p*(t - ts[k]) + dd[k], highest k first
    power = [0.0] * r
    power[0] = dd[r - 1]
    deg = 0
    for k in range(r - 2, -1, -1):
        c = ts[k]
        for d in range(deg + 1, 0, -1):
            power[d] = power[d - 1] - c * power[d]
        power[0] = -c * power[0] + dd[k]
        deg += 1
    return tuple(power)


def build_lagrange(f_values_only: Callable[[float], float], kv: KnotVector, r: int) -> PiecewisePolynomial:
    """Per-cell degree-(r-1) interpolant through r nodes inside each cell."""
    if not (isinstance(r, int) and r >= 1):
        raise ParameterOutOfRange(f"r must be a positive integer, got {r}")
    cells = kv.cells()
    anchors = []
    coeffs = []
    for idx, (a, b) in enumerate(cells):
        if math.isfinite(a) and math.isfinite(b):
            nodes = _cgl_nodes(a, b, r)
            anchor = b if _anchor_right(a, b) else a
        elif b == math.inf:
            prev = cells[idx - 1] if idx > 0 else None
            width = (prev[1] - prev[0]) if prev is not None and math.isfinite(prev[0]) else 1.0
            nodes = _tail_nodes(a, width, r, +1.0)
            anchor = a
        else:
            nxt = cells[idx + 1] if idx + 1 < len(cells) else None
            width = (nxt[1] - nxt[0]) if nxt is not None and math.isfinite(nxt[1]) else 1.0
            nodes = _tail_nodes(b, width, r, -1.0)
            anchor = b
        ts = tuple(x - anchor for x in nodes)
        vals = tuple(f_values_only(x) for x in nodes)
        anchors.append(anchor)
        coeffs.append(_newton_to_power(ts, vals, r))
    return PiecewisePolynomial(kv=kv, anchors=tuple(anchors), coeffs=tuple(coeffs), form="lagrange", r=r)


def eval_piecewise(P: PiecewisePolynomial, x: float) -> float:
    """Value of the piecewise polynomial at x; OutOfSpan outside the knot range."""
    v = piecewise_scalar(P._knots_arr, P._anchors_arr, P._coeffs_arr, float(x))
    if math.isnan(v):
        span = P.kv.span
        raise OutOfSpan(f"x={x!r} outside the knot span [{span.lo}, {span.hi}]")
    return v


def eval_piecewise_many(P: PiecewisePolynomial, xs) -> np.ndarray:
    """Vectorized evaluation; out-of-span entries raise OutOfSpan."""
    out = piecewise_many(P._knots_arr, P._anchors_arr, P._coeffs_arr, np.asarray(xs, dtype=np.float64))
    if np.isnan(out).any():
        span = P.kv.span
        raise OutOfSpan(f"some points lie outside the knot span [{span.lo}, {span.hi}]")
    return out


def weighted_Lq_norm(
    g: Callable[[float], float],
    rho: WeightFunction,
    q: float,
    iv: Interval,
    tol: Tolerance = DEFAULT_TOL,
) -> float:
    """(∫ |g rho|^q)^{1/q} over iv, or the supremum of |g rho| for q = inf."""
    log_rho = rho.log_at
    if q == math.inf:
        return sup_on(lambda x: abs(g(x)) * math.exp(log_rho(x)), iv, tol)
    if not q >= 1.0:
        raise ParameterOutOfRange(f"q must lie in [1, inf], got {q}")

    def integrand(x: float) -> float:
        gv = abs(g(x))
        if gv == 0.0:
            return 0.0
        return math.exp(q * (math.log(gv) + log_rho(x)))

    total = integrate(integrand, iv, tol).value
    return total ** (1.0 / q)


def smoothness_seminorm(
    f: FunctionWithDerivatives,
    psi: WeightFunction,
    p: float,
    iv: Interval,
    tol: Tolerance = DEFAULT_TOL,
    r: Optional[int] = None,
) -> float:
    """‖f^(r) psi‖_{L_p} over iv; r defaults to the highest supplied derivative."""
    if r is None:
        r = f.orders - 1
    deriv = f.derivative(r)
    return weighted_Lq_norm(deriv, psi, p, iv, tol)


def approximation_error(
    f: Callable[[float], float],
    P: PiecewisePolynomial,
    rho: WeightFunction,
    q: float,
    tol: Tolerance = DEFAULT_TOL,
) -> float:
    """‖(f - P) rho‖_{L_q} accumulated cell by cell so panels never straddle knots."""
    log_rho = rho.log_at
    cells = P.kv.cells()
    if q == math.inf:
        worst = 0.0
        for i, (a, b) in enumerate(cells):
            s = sup_on(
                lambda x, i=i: abs(f(x) - P.cell_value(i, x)) * math.exp(log_rho(x)),
                Interval(a, b),
                tol,
            )
            worst = max(worst, s)
        return worst
    if not q >= 1.0:
        raise ParameterOutOfRange(f"q must lie in [1, inf], got {q}")
    total = 0.0
    for i, (a, b) in enumerate(cells):
        def integrand(x: float, i=i) -> float:
            dv = abs(f(x) - P.cell_value(i, x))
            if dv == 0.0:
                return 0.0
            return math.exp(q * (math.log(dv) + log_rho(x)))

        total += integrate(integrand, Interval(a, b), tol).value
    return total ** (1.0 / q)
