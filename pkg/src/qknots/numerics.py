"""Self-contained numerical kernels.

Adaptive integration over possibly unbounded intervals, bracketed root
finding, scalar minimization, supremum estimation, and erf. Everything else
in the package is built on these.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Tuple

from . import _kernels
from .errors import DomainError, NoSignChange, NonConvergence, ParameterOutOfRange

__all__ = [
    "Interval",
    "Tolerance",
    "IntegrationResult",
    "DEFAULT_TOL",
    "REAL_LINE",
    "HALF_LINE",
    "integrate",
    "find_root",
    "minimize_scalar",
    "sup_on",
    "erf",
]


@dataclass(frozen=True)
class Interval:
    """An interval with extended-real endpoints, lo < hi."""

    lo: float
    hi: float

    def __post_init__(self):
        lo, hi = float(self.lo), float(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if math.isnan(lo) or math.isnan(hi) or not lo < hi:
            raise ParameterOutOfRange(f"invalid interval [{lo}, {hi}]")

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    @property
    def bounded(self) -> bool:
        return math.isfinite(self.lo) and math.isfinite(self.hi)


REAL_LINE = Interval(-math.inf, math.inf)
HALF_LINE = Interval(0.0, math.inf)


@dataclass(frozen=True)
class Tolerance:
    """Accuracy request: relative and absolute targets plus a subdivision budget."""

    rel: float = 1e-10
    abs: float = 1e-13
    max_subdivisions: int = 2000

    def __post_init__(self):
        if not self.rel >= 1e-14:
            raise ParameterOutOfRange("rel tolerance below 1e-14 is rejected")
        if not self.abs >= 0.0:
            raise ParameterOutOfRange("abs tolerance must be >= 0")
        if self.max_subdivisions < 1:
            raise ParameterOutOfRange("max_subdivisions must be positive")

    def target(self, value: float) -> float:
        return max(self.abs, self.rel * abs(value))


DEFAULT_TOL = Tolerance()


class IntegrationResult(float):
    """A float carrying the integration error estimate as .error."""

    error: float

    def __new__(cls, value: float, error: float):
        obj = super().__new__(cls, value)
        obj.error = error
        return obj

    @property
    def value(self) -> float:
        return float(self)


# 7-point Gauss / 15-point Kronrod pair on [-1, 1].
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
)
_WGK_CENTER = 0.209482141084727828012999174891714
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
)
_WG_CENTER = 0.417959183673469387755102040816327


class _TailOverflow(Exception):
    # internal: mapped integrand overflowed near an infinite endpoint
    pass


def _gk_panel(g: Callable[[float], float], a: float, b: float) -> Tuple[float, float]:
    """One Gauss-Kronrod panel on [a, b]: (K15 value, |K15 - G7| error estimate)."""
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    fc = g(c)
    resk = _WGK_CENTER * fc
    resg = _WG_CENTER * fc
    for i in range(7):
        fsum = g(c - h * _XGK[i]) + g(c + h * _XGK[i])
        resk += _WGK[i] * fsum
        if i & 1:
            resg += _WG[i >> 1] * fsum
    if not math.isfinite(resk):
        raise _TailOverflow
    return resk * h, abs(resk - resg) * h


def _checked(f: Callable[[float], float]) -> Callable[[float], float]:
    def g(x: float) -> float:
        v = f(x)
        if not math.isfinite(v):
            raise DomainError(f"integrand returned non-finite value {v!r} at x={x!r}")
        return v

    return g


def _mapped(f: Callable[[float], float], iv: Interval) -> Tuple[Callable[[float], float], float, float]:
    """Transform f on iv to a finite parameter interval.

    Infinite endpoints use the rational substitution x = a + (1-t)/t, which
    places the tail at t = 0 where gradual underflow lets the adaptive
    subdivision refine without running out of representable points.
    """
    lo, hi = iv.lo, iv.hi
    if iv.bounded:
        return _checked(f), lo, hi
    fc = _checked(f)
    if math.isfinite(lo):

        def g(t: float) -> float:
            u = (1.0 - t) / t
            x = lo + u
            if not math.isfinite(x):
                raise _TailOverflow
            v = fc(x) / (t * t)
            if not math.isfinite(v):
                raise _TailOverflow
            return v

        return g, 0.0, 1.0
    if math.isfinite(hi):

        def g(t: float) -> float:
            u = (1.0 - t) / t
            x = hi - u
            if not math.isfinite(x):
                raise _TailOverflow
            v = fc(x) / (t * t)
            if not math.isfinite(v):
                raise _TailOverflow
            return v

        return g, 0.0, 1.0
    raise AssertionError("doubly infinite interval must be split by the caller")


def _adaptive(g: Callable[[float], float], a: float, b: float, tol: Tolerance) -> IntegrationResult:
    try:
        val, err = _gk_panel(g, a, b)
    except _TailOverflow:
        raise NonConvergence("integrand could not be resolved near an infinite endpoint") from None
    panels = [(-err, 0, a, b, val, err)]
    total_val = val
    total_err = err
    count = 1
    serial = 1
    while total_err > tol.target(total_val):
        if count >= tol.max_subdivisions:
            raise NonConvergence(
                f"integral not converged after {count} subdivisions "
                f"(value~{total_val:.6g}, error~{total_err:.3g})"
            )
        neg_err, _, pa, pb, pval, perr = heapq.heappop(panels)
        mid = 0.5 * (pa + pb)
        if mid <= pa or mid >= pb:
            raise NonConvergence("subdivision reached machine resolution without converging")
        try:
            lval, lerr = _gk_panel(g, pa, mid)
            rval, rerr = _gk_panel(g, mid, pb)
        except _TailOverflow:
            raise NonConvergence("integrand could not be resolved near an infinite endpoint") from None
        total_val += lval + rval - pval
        total_err += lerr + rerr - perr
        heapq.heappush(panels, (-lerr, serial, pa, mid, lval, lerr))
        heapq.heappush(panels, (-rerr, serial + 1, mid, pb, rval, rerr))
        serial += 2
        count += 1
        # re-sum occasionally to shed accumulated cancellation in the running totals
        if count % 64 == 0:
            total_val = math.fsum(p[4] for p in panels)
            total_err = math.fsum(p[5] for p in panels)
    return IntegrationResult(total_val, total_err)


def integrate(f: Callable[[float], float], iv: Interval, tol: Tolerance = DEFAULT_TOL) -> IntegrationResult:
    """Integrate f over iv adaptively; the result float carries .error.

    Infinite endpoints are handled by the rational map (see _mapped); the
    doubly infinite line is split at zero. Raises NonConvergence when the
    subdivision budget is exhausted and DomainError when f itself returns a
    non-finite value at a finite point.
    """
    if iv.lo == -math.inf and iv.hi == math.inf:
        half = Tolerance(tol.rel, 0.5 * tol.abs, tol.max_subdivisions // 2) if tol.abs else tol
        neg = integrate(f, Interval(-math.inf, 0.0), half)
        pos = integrate(f, Interval(0.0, math.inf), half)
        return IntegrationResult(neg.value + pos.value, neg.error + pos.error)
    g, a, b = _mapped(f, iv)
    return _adaptive(g, a, b, tol)


def find_root(f: Callable[[float], float], bracket: Interval, tol: Tolerance = DEFAULT_TOL) -> float:
    """Root of f inside a finite sign-changing bracket (bisection/secant hybrid)."""
    a, b = bracket.lo, bracket.hi
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ParameterOutOfRange("root bracket must be finite")
    fa = f(a)
    fb = f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if math.copysign(1.0, fa) == math.copysign(1.0, fb):
        raise NoSignChange(f"f({a})={fa:.6g} and f({b})={fb:.6g} have the same sign")
    for _ in range(200):
        width = b - a
        mid = 0.5 * (a + b)
        if width <= tol.rel * abs(mid) + tol.abs or width <= 4 * math.ulp(mid):
            return mid
        x = mid
        if fb != fa:
            secant = b - fb * (b - a) / (fb - fa)
            if a + 0.01 * width < secant < b - 0.01 * width:
                x = secant
        fx = f(x)
        if fx == 0.0:
            return x
        if math.copysign(1.0, fx) == math.copysign(1.0, fa):
            a, fa = x, fx
        else:
            b, fb = x, fx
    raise NonConvergence("root refinement did not reach the requested width")


_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def _golden_min(
    f: Callable[[float], float], a: float, b: float, tol: Tolerance
) -> Tuple[float, float]:
    x1 = b - _INV_GOLDEN * (b - a)
    x2 = a + _INV_GOLDEN * (b - a)
    f1 = f(x1)
    f2 = f(x2)
    for _ in range(400):
        if (b - a) <= tol.rel * abs(0.5 * (a + b)) + tol.abs or (b - a) <= 4 * math.ulp(0.5 * (a + b)):
            break
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INV_GOLDEN * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INV_GOLDEN * (b - a)
            f2 = f(x2)
    else:
        raise NonConvergence("golden-section refinement did not reach the requested width")
    xm = x1 if f1 <= f2 else x2
    fm = min(f1, f2)
    return xm, fm


def minimize_scalar(
    f: Callable[[float], float], bracket: Interval, tol: Tolerance = DEFAULT_TOL
) -> Tuple[float, float]:
    """Golden-section minimum of a unimodal f on a finite bracket: (argmin, min)."""
    a, b = bracket.lo, bracket.hi
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ParameterOutOfRange("minimization bracket must be finite")
    return _golden_min(f, a, b, tol)


def _grid_points(iv: Interval, n: int):
    """n ascending sample points covering iv, tails compressed by the rational map."""
    lo, hi = iv.lo, iv.hi
    if iv.bounded:
        return [lo + (hi - lo) * j / (n - 1) for j in range(n)]
    if math.isfinite(lo):
        # t in (0, 1], x = lo + (1-t)/t, farthest point ~ lo + n
        return [lo + (1.0 - t) / t for t in (j / n for j in range(n, 0, -1))]
    if math.isfinite(hi):
        return [hi - (1.0 - t) / t for t in (j / n for j in range(1, n + 1))]
    half = _grid_points(Interval(0.0, math.inf), n // 2)
    return [-x for x in reversed(half)] + half


def sup_on(
    f: Callable[[float], float], iv: Interval, tol: Tolerance = DEFAULT_TOL, grid: int = 4096
) -> float:
    """Supremum of a continuous f on iv: coarse scan plus golden refinement."""
    pts = _grid_points(iv, grid)
    best_i = 0
    best_v = -math.inf
    for i, x in enumerate(pts):
        v = f(x)
        if math.isnan(v) or v == math.inf:
            raise DomainError(f"non-finite sample {v!r} at x={x!r}")
        if v > best_v:
            best_v = v
            best_i = i
    lo = pts[max(best_i - 1, 0)]
    hi = pts[min(best_i + 1, len(pts) - 1)]
    if lo == hi:
        return best_v
    _, neg = _golden_min(lambda x: -f(x), lo, hi, tol)
    return max(best_v, -neg)


def erf(x: float) -> float:
    """Error function, absolute error <= 1e-14, odd symmetry exact."""
    return _kernels.erf_scalar(x)
