"""Knot vectors from equal-mass quantile conditions on a quantizer weight.

The knots x_i split the domain so every cell carries the same integral of
kappa^(1/alpha). Closed forms cover the exponential, log-normal, and
Student-type quantizers; everything else is inverted numerically by monotone
bisection on the cumulative integral.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

from .core import (
    ConstantOne,
    ExponentialKernel,
    ExponentialShape,
    ExponentialShapeB,
    GaussianDensity,
    GaussianShape,
    LogNormalQuantizer,
    RatioWeight,
    StudentQuantizer,
    WeightFunction,
    _log_student_norm,
)
from .errors import (
    MonotonicityUndeclared,
    NonConvergence,
    NonIntegrableQuantizer,
    ParameterOutOfRange,
)
from .numerics import DEFAULT_TOL, Interval, Tolerance, integrate

__all__ = [
    "KnotVector",
    "knots_halfline",
    "knots_realline",
    "knots_lognormal",
    "quantizer_mass",
]


@dataclass(frozen=True)
class KnotVector:
    """Strictly increasing knots (±inf endpoints allowed) with the cell mass."""

    knots: Tuple[float, ...]
    mass_per_cell: float
    alpha: float
    quantizer: WeightFunction

    def __post_init__(self):
        ks = self.knots
        if len(ks) < 2:
            raise ParameterOutOfRange("a knot vector needs at least two knots")
        for a, b in zip(ks, ks[1:]):
            if not a < b:
                raise ParameterOutOfRange(f"knots must strictly increase, got {a} >= {b}")

    @property
    def n_cells(self) -> int:
        return len(self.knots) - 1

    def cells(self) -> Tuple[Tuple[float, float], ...]:
        return tuple(zip(self.knots, self.knots[1:]))

    @property
    def span(self) -> Interval:
        return Interval(self.knots[0], self.knots[-1])


def _pow_callable(kappa: WeightFunction, alpha: float) -> Callable[[float], float]:
    inv = 1.0 / alpha
    log_at = kappa.log_at

    def kpow(x: float) -> float:
        return math.exp(log_at(x) * inv)

    return kpow


def _rate_of_exponential(kappa: WeightFunction) -> Optional[float]:
    if isinstance(kappa, ExponentialKernel):
        return kappa.a
    if isinstance(kappa, ExponentialShapeB):
        return kappa.b
    if isinstance(kappa, ExponentialShape):
        return 1.0 / kappa.lam
    return None


def _mass_closed(kappa: WeightFunction, alpha: float, iv: Interval) -> Optional[float]:
    """Closed-form ∫ kappa^(1/alpha) over iv for the named families, else None."""
    halfline = iv.lo == 0.0 and iv.hi == math.inf
    realline = iv.lo == -math.inf and iv.hi == math.inf

    rate = _rate_of_exponential(kappa)
    if rate is not None:
        if realline:
            return 2.0 * alpha / rate
        if halfline:
            return alpha / rate
        return None
    if isinstance(kappa, ConstantOne):
        if iv.bounded:
            return iv.hi - iv.lo
        raise NonIntegrableQuantizer("constant weight is not integrable on an unbounded domain")
    if isinstance(kappa, GaussianDensity):
        if realline:
            root = math.sqrt(2.0 * math.pi)
            return (kappa.sigma * root) ** (1.0 - 1.0 / alpha) * math.sqrt(alpha)
        if halfline and kappa.mu == 0.0:
            root = math.sqrt(2.0 * math.pi)
            return 0.5 * (kappa.sigma * root) ** (1.0 - 1.0 / alpha) * math.sqrt(alpha)
        return None
    if isinstance(kappa, GaussianShape):
        if kappa.lam == math.inf:
            raise NonIntegrableQuantizer("flat Gaussian shape (lam=inf) is not integrable")
        if realline:
            return kappa.lam * math.sqrt(2.0 * math.pi * alpha)
        if halfline:
            return 0.5 * kappa.lam * math.sqrt(2.0 * math.pi * alpha)
        return None
    if isinstance(kappa, LogNormalQuantizer):
        if halfline:
            if kappa.c <= alpha:
                raise NonIntegrableQuantizer(
                    f"power tail needs c > alpha, got c={kappa.c}, alpha={alpha}"
                )
            return (kappa.c / (kappa.c - alpha)) * math.exp(kappa.mu)
        return None
    if isinstance(kappa, StudentQuantizer):
        if kappa.a <= alpha:
            raise NonIntegrableQuantizer(
                f"power tail needs a > alpha, got a={kappa.a}, alpha={alpha}"
            )
        if realline:
            return 2.0 * alpha / (kappa.a - alpha)
        if halfline:
            return alpha / (kappa.a - alpha)
        return None
    if isinstance(kappa, RatioWeight) and kappa.tag is not None:
        return _ratio_mass_closed(kappa.tag, alpha, iv)
    return None


def _ratio_mass_closed(tag: Tuple, alpha: float, iv: Interval) -> Optional[float]:
    realline = iv.lo == -math.inf and iv.hi == math.inf
    halfline = iv.lo == 0.0 and iv.hi == math.inf
    root2pi = math.sqrt(2.0 * math.pi)
    kind = tag[0]
    if kind == "gauss-gauss":
        sigma, lam = tag[1], tag[2]
        if not realline:
            return None
        d = 1.0 / sigma**2 - (0.0 if lam == math.inf else 1.0 / lam**2)
        if d <= 0.0:
            raise NonIntegrableQuantizer("ratio weight has no Gaussian decay (lam <= sigma)")
        return (sigma * root2pi) ** (-1.0 / alpha) * math.sqrt(2.0 * math.pi * alpha / d)
    if kind == "gauss-exp":
        sigma, lam = tag[1], tag[2]
        if not realline:
            return None
        from .numerics import erf

        arg = sigma / (lam * math.sqrt(2.0 * alpha))
        return (
            (sigma * root2pi) ** (-1.0 / alpha)
            * sigma
            * math.sqrt(2.0 * math.pi * alpha)
            * math.exp(sigma**2 / (2.0 * alpha * lam**2))
            * (1.0 + erf(arg))
        )
    if kind == "lognormal":
        mu, sigma = tag[1], tag[2]
        if not halfline:
            return None
        return (
            sigma
            * math.sqrt(2.0 * math.pi * alpha)
            * (sigma * root2pi) ** (-1.0 / alpha)
            * math.exp(sigma**2 * (alpha - 1.0) ** 2 / (2.0 * alpha) + mu * (alpha - 1.0) / alpha)
        )
    if kind == "student":
        nu, b = tag[1], tag[2]
        if not realline:
            return None
        mu = (nu + 1.0 - b - alpha) / alpha
        if mu <= 0.0:
            raise NonIntegrableQuantizer(
                f"ratio weight tail exponent must exceed alpha (nu+1-b={nu + 1 - b}, alpha={alpha})"
            )
        t_nu = math.exp(_log_student_norm(nu))
        t_mu = math.exp(_log_student_norm(mu))
        return t_nu ** (1.0 / alpha) * math.sqrt(nu) / (t_mu * math.sqrt(mu))
    return None


def quantizer_mass(
    kappa: WeightFunction,
    alpha: float,
    method: str = "auto",
    tol: Tolerance = DEFAULT_TOL,
    domain: Optional[Interval] = None,
) -> float:
    """‖kappa^{1/alpha}‖_{L1} over the weight's domain (or an explicit one).

    method "auto" dispatches closed forms for the named families; "numeric"
    forces integration. Divergent tails raise NonIntegrableQuantizer.
    """
    if not alpha > 0.0:
        raise ParameterOutOfRange(f"alpha must be positive, got {alpha}")
    if method not in ("auto", "numeric"):
        raise ParameterOutOfRange(f"unknown method {method!r}")
    iv = kappa.domain if domain is None else domain
    if method == "auto":
        closed = _mass_closed(kappa, alpha, iv)
        if closed is not None:
            return closed
    kpow = _pow_callable(kappa, alpha)
    try:
        res = integrate(kpow, iv, tol)
    except NonConvergence as exc:
        raise NonIntegrableQuantizer(
            f"integral of kappa^(1/alpha) failed to converge over [{iv.lo}, {iv.hi}]: {exc}"
        ) from exc
    if not math.isfinite(res.value) or res.value <= 0.0:
        raise NonIntegrableQuantizer(f"integral of kappa^(1/alpha) is {res.value}")
    return res.value


def _invert_cumulative(
    kpow: Callable[[float], float],
    x_prev: float,
    increment: float,
    guess_width: float,
    tol: Tolerance,
) -> float:
    """Solve ∫_{x_prev}^{x} kpow = increment for x by bracketed bisection."""
    inner = Tolerance(rel=max(tol.rel * 1e-2, 1e-13), abs=0.0, max_subdivisions=tol.max_subdivisions)

    def cum(x: float) -> float:
        if x <= x_prev:
            return 0.0
        return integrate(kpow, Interval(x_prev, x), inner).value

    width = guess_width if guess_width > 0.0 else 1.0
    hi = x_prev + width
    for _ in range(200):
        if cum(hi) >= increment:
            break
        width *= 2.0
        hi = x_prev + width
    else:
        raise NonConvergence("could not bracket the next equal-mass knot")

    lo = x_prev
    fhi = cum(hi) - increment
    if fhi == 0.0:
        return hi
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return mid
        fmid = cum(mid) - increment
        if abs(hi - lo) <= tol.rel * max(abs(mid), 1.0) + tol.abs:
            return mid
        if (fmid > 0.0) == (fhi > 0.0):
            hi, fhi = mid, fmid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def _halfline_interior_closed(
    kappa: WeightFunction, alpha: float, n: int, i: int
) -> Optional[float]:
    """Closed-form x with ∫_0^x kappa^{1/alpha} = (i/n)·(half-line mass), else None."""
    frac = i / n
    rate = _rate_of_exponential(kappa)
    if rate is not None:
        return -(alpha / rate) * math.log1p(-frac)
    if isinstance(kappa, LogNormalQuantizer):
        return _lognormal_knot(kappa.c, alpha, kappa.mu, n, i)
    if isinstance(kappa, StudentQuantizer):
        return (1.0 - frac) ** (-alpha / (kappa.a - alpha)) - 1.0
    return None


def _lognormal_knot(c: float, alpha: float, mu: float, n: int, i: int) -> float:
    scale = math.exp(mu)
    if i * c <= n * (c - alpha):
        return (c / (c - alpha)) * scale * (i / n)
    return scale * ((alpha / c) * (n / (n - i))) ** (alpha / (c - alpha))


def _check_halfline_eligible(kappa: WeightFunction) -> None:
    if not kappa.nonincreasing_halfline:
        raise MonotonicityUndeclared(
            "quantizer must be declared nonincreasing on the half line"
        )


def _positive_knots(
    kappa: WeightFunction,
    alpha: float,
    n: int,
    half_mass: float,
    tol: Tolerance,
) -> Tuple[float, ...]:
    """Interior knots 0 < x_1 < ... < x_{n-1} with equal half-line mass cells."""
    if n == 1:
        return ()
    closed_first = _halfline_interior_closed(kappa, alpha, n, 1)
    if closed_first is not None:
        return tuple(_halfline_interior_closed(kappa, alpha, n, i) for i in range(1, n))
    kpow = _pow_callable(kappa, alpha)
    increment = half_mass / n
    xs = []
    x_prev = 0.0
    width = 0.0
    for _ in range(1, n):
        x = _invert_cumulative(kpow, x_prev, increment, width, tol)
        xs.append(x)
        width = x - x_prev
        x_prev = x
    return tuple(xs)


def knots_halfline(
    kappa: WeightFunction, alpha: float, n: int, tol: Tolerance = DEFAULT_TOL
) -> KnotVector:
    """n+1 knots on [0, inf) with x_0 = 0, x_n = inf and equal cell masses."""
    if not (isinstance(n, int) and n >= 1):
        raise ParameterOutOfRange(f"n must be a positive integer, got {n}")
    if not alpha > 0.0:
        raise ParameterOutOfRange(f"alpha must be positive, got {alpha}")
    _check_halfline_eligible(kappa)
    half = Interval(0.0, math.inf)
    mass = quantizer_mass(kappa, alpha, domain=half, tol=tol)
    interior = _positive_knots(kappa, alpha, n, mass, tol)
    knots = (0.0,) + interior + (math.inf,)
    return KnotVector(knots=knots, mass_per_cell=mass / n, alpha=alpha, quantizer=kappa)


def knots_realline(
    kappa: WeightFunction, alpha: float, n: int, tol: Tolerance = DEFAULT_TOL
) -> KnotVector:
    """2n+1 knots on the real line, symmetric through x_0 = 0, equal cell masses."""
    if not (isinstance(n, int) and n >= 1):
        raise ParameterOutOfRange(f"n must be a positive integer, got {n}")
    if not alpha > 0.0:
        raise ParameterOutOfRange(f"alpha must be positive, got {alpha}")
    if not kappa.symmetric_unimodal:
        raise MonotonicityUndeclared(
            "real-line quantizer must be declared symmetric-unimodal"
        )
    half = Interval(0.0, math.inf)
    half_mass = quantizer_mass(kappa, alpha, domain=half, tol=tol)
    interior = _positive_knots(kappa, alpha, n, half_mass, tol)
    positive = interior + (math.inf,)
    negative = tuple(-x for x in reversed(positive))
    knots = negative + (0.0,) + positive
    return KnotVector(
        knots=knots, mass_per_cell=half_mass / n, alpha=alpha, quantizer=kappa
    )


def knots_lognormal(
    c: float, alpha: float, mu: float, n: int
) -> KnotVector:
    """Half-line knots for the flat-then-power quantizer, fully closed-form."""
    if not (isinstance(n, int) and n >= 1):
        raise ParameterOutOfRange(f"n must be a positive integer, got {n}")
    if not alpha > 0.0:
        raise ParameterOutOfRange(f"alpha must be positive, got {alpha}")
    if not c > alpha:
        raise ParameterOutOfRange(f"need c > alpha for an integrable tail, got c={c}, alpha={alpha}")
    kappa = LogNormalQuantizer(c=c, mu=mu)
    interior = tuple(_lognormal_knot(c, alpha, mu, n, i) for i in range(1, n))
    knots = (0.0,) + interior + (math.inf,)
    mass = (c / (c - alpha)) * math.exp(mu)
    return KnotVector(knots=knots, mass_per_cell=mass / n, alpha=alpha, quantizer=kappa)
