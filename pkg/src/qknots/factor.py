"""Mismatch functional E_p^q and the multiplicative penalty FCTR.

FCTR(p,q,omega,kappa) = (‖kappa^{1/a}‖₁^a / ‖omega^{1/a}‖₁^a) · E_p^q(omega,kappa)
with a = alpha. E is a sup-ratio for p <= q and a normalized power mean of
omega/kappa for p > q. Each named family gets its closed form; everything else
goes through the numeric path.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Optional

from .core import (
    ProblemExponents,
    RatioWeight,
    WeightFunction,
    _log_student_norm,
    c1_constant,
    omega_of,
)
from .errors import InfiniteFactor, NonConvergence, ParameterOutOfRange
from .numerics import DEFAULT_TOL, Interval, Tolerance, erf, find_root, integrate, minimize_scalar
from .quantizer import quantizer_mass

__all__ = [
    "FactorReport",
    "e_pq_numeric",
    "fctr_numeric",
    "fctr_example_gaussian_variance",
    "fctr_gauss_gauss",
    "fctr_gauss_exp",
    "solve_c_star",
    "fctr_lognormal_pleq",
    "fctr_lognormal_int",
    "fctr_bound_logistic",
    "fctr_bound_student",
    "theorem1_bound",
]

_ROOT_2PI = math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class FactorReport:
    """E, both masses (alpha-th powers), their product FCTR, and provenance."""

    e_pq: float
    kappa_mass_alpha: float
    omega_mass_alpha: float
    fctr: float
    kind: str
    params: Dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in ("exact-closed-form", "numeric", "upper-bound"):
            raise ParameterOutOfRange(f"unknown report kind {self.kind!r}")


def _shared_domain(omega: WeightFunction, kappa: WeightFunction) -> Interval:
    return Interval(
        max(omega.domain.lo, kappa.domain.lo), min(omega.domain.hi, kappa.domain.hi)
    )


def _clip(iv: Interval, t: float) -> Interval:
    return Interval(max(iv.lo, -t), min(iv.hi, t))


def _grid_max(f, iv: Interval, m: int = 2049) -> tuple:
    """Maximum of f on a uniform grid over iv: (value, argmax, spacing)."""
    best = -math.inf
    best_x = iv.lo
    lo, hi = iv.lo, iv.hi
    for j in range(m):
        x = lo + (hi - lo) * j / (m - 1)
        v = f(x)
        if v > best:
            best = v
            best_x = x
    return best, best_x, (hi - lo) / (m - 1)


def e_pq_numeric(
    omega: WeightFunction,
    kappa: WeightFunction,
    exps: ProblemExponents,
    tol: Tolerance = DEFAULT_TOL,
) -> float:
    """E_p^q(omega, kappa) by supremum (p <= q) or normalized integral (p > q).

    Truncations [-T, T] grow geometrically from T = 10, scanning only the
    newly exposed shells so the grid resolution follows the scale.  The scan
    stops once the tail is provably negligible (shell values 30 logs below
    the running result) or, for the supremum, once the ratio has plateaued;
    otherwise T runs to ~1e31 and infinity is reported.  Ratios whose tail
    approaches a nonzero level within e^30 of an interior maximum cannot be
    distinguished from divergence and also report infinity.
    """
    alpha = exps.alpha
    dom = _shared_domain(omega, kappa)
    log_ratio = lambda x: omega.log_at(x) - kappa.log_at(x)
    t_cap = 10.0 * 2.0**100

    def _shells(t: float) -> list:
        out = []
        if dom.hi > t:
            out.append(Interval(t, min(dom.hi, 2.0 * t)))
        if dom.lo < -t:
            out.append(Interval(max(dom.lo, -2.0 * t), -t))
        return out

    if exps.p_le_q:
        def ratio(x: float) -> float:
            return math.exp(log_ratio(x))

        best, best_x, best_dx = _grid_max(log_ratio, _clip(dom, 10.0))
        t = 10.0
        flat = 0
        plateau = 0
        easing = 0
        prev_shell = math.inf
        stopped = False
        while True:
            shells = _shells(t)
            if not shells:
                stopped = True
                break
            prev = best
            shell_best = -math.inf
            for shell in shells:
                v, x, dx = _grid_max(log_ratio, shell)
                shell_best = max(shell_best, v)
                if v > best:
                    best, best_x, best_dx = v, x, dx
            if math.isfinite(prev):
                step = 1e-7 * max(1.0, abs(prev))
                improved = best > prev + step
                plateau = plateau + 1 if abs(shell_best - prev) <= step else 0
            else:
                improved = best > prev
                plateau = 0
            flat = 0 if improved else flat + 1
            easing = easing + 1 if shell_best <= prev_shell else 0
            prev_shell = shell_best
            if plateau >= 3:
                stopped = True
                break
            if math.isfinite(best) and (
                (flat >= 2 and shell_best <= best - 30.0)
                or (flat >= 12 and easing >= 12 and shell_best <= best - 1.0)
            ):
                stopped = True
                break
            if t >= t_cap:
                break
            t *= 2.0
        if not stopped:
            return math.inf
        lo_r = max(dom.lo, best_x - best_dx)
        hi_r = min(dom.hi, best_x + best_dx)
        if hi_r > lo_r:
            _, neg = minimize_scalar(lambda x: -ratio(x), Interval(lo_r, hi_r), tol)
            return max(math.exp(best), -neg)
        return math.exp(best)

    gap = alpha - exps.r
    mass = quantizer_mass(kappa, alpha, tol=tol, domain=dom)
    log_mass = math.log(mass)
    inv_alpha = 1.0 / alpha
    inv_gap = 1.0 / gap
    log_kappa = kappa.log_at

    def log_integrand(x: float) -> float:
        return log_kappa(x) * inv_alpha - log_mass + log_ratio(x) * inv_gap

    def integrand(x: float) -> float:
        return math.exp(log_integrand(x))

    try:
        total = integrate(integrand, _clip(dom, 10.0), tol).value
        t = 10.0
        flat = 0
        stopped = False
        while True:
            shells = _shells(t)
            if not shells:
                stopped = True
                break
            inc = 0.0
            shell_logmax = -math.inf
            for shell in shells:
                inc += integrate(integrand, shell, tol).value
                v, _, _ = _grid_max(log_integrand, shell, m=257)
                shell_logmax = max(shell_logmax, v)
            total += inc
            flat = flat + 1 if inc <= 1e-9 * total else 0
            log_total = math.log(total) if total > 0.0 else -745.0
            decayed = shell_logmax + math.log(2.0 * t) <= log_total - 30.0
            if flat >= 2 and decayed:
                stopped = True
                break
            if t >= t_cap:
                break
            t *= 2.0
    except (NonConvergence, OverflowError):
        return math.inf
    if not stopped or not math.isfinite(total):
        return math.inf
    return total**gap


def fctr_numeric(
    rho: WeightFunction,
    psi: WeightFunction,
    kappa: WeightFunction,
    exps: ProblemExponents,
    tol: Tolerance = DEFAULT_TOL,
) -> FactorReport:
    """FCTR with numerically integrated masses and numeric E."""
    alpha = exps.alpha
    omega = omega_of(rho, psi)
    dom = _shared_domain(omega, kappa)
    kappa_mass = quantizer_mass(kappa, alpha, method="numeric", tol=tol, domain=dom)
    omega_mass = quantizer_mass(omega, alpha, method="numeric", tol=tol, domain=dom)
    e = e_pq_numeric(omega, kappa, exps, tol)
    ka = kappa_mass**alpha
    oa = omega_mass**alpha
    fctr = math.inf if e == math.inf else ka * e / oa
    return FactorReport(
        e_pq=e,
        kappa_mass_alpha=ka,
        omega_mass_alpha=oa,
        fctr=fctr,
        kind="numeric",
        params={
            "p": exps.p,
            "q": exps.q,
            "r": exps.r,
            "alpha": alpha,
            "rho": repr(rho),
            "psi": repr(psi),
            "kappa": repr(kappa),
        },
    )


def fctr_example_gaussian_variance(sigma2: float) -> float:
    """Penalty for a Gaussian quantizer of variance sigma2 against the unit
    Gaussian weight (p=inf, q=1, r=1): infinite at or below variance 1/2."""
    if not sigma2 > 0.0:
        raise ParameterOutOfRange(f"variance must be positive, got {sigma2}")
    if sigma2 <= 0.5:
        return math.inf
    return sigma2 / math.sqrt(2.0 * sigma2 - 1.0)


def _report_closed(e, ka, oa, kind, params) -> FactorReport:
    return FactorReport(
        e_pq=e, kappa_mass_alpha=ka, omega_mass_alpha=oa, fctr=ka * e / oa, kind=kind, params=params
    )


def fctr_gauss_gauss(
    sigma: float, lam: float, exps: ProblemExponents, a: Optional[float] = None
) -> FactorReport:
    """Gaussian weight over Gaussian shape, exponential quantizer e^{-a|x|}."""
    if not sigma > 0.0:
        raise ParameterOutOfRange("sigma must be positive")
    if not lam > sigma:
        raise ParameterOutOfRange(f"need lam > sigma, got lam={lam}, sigma={sigma}")
    alpha = exps.alpha
    d = 1.0 / sigma**2 - (0.0 if lam == math.inf else 1.0 / lam**2)
    oa = (2.0 * math.pi * alpha / d) ** (alpha / 2.0) / (sigma * _ROOT_2PI)
    a_star = math.sqrt(alpha * d)
    params = {
        "sigma": sigma, "lam": lam, "p": exps.p, "q": exps.q, "r": exps.r,
        "alpha": alpha, "a_star": a_star,
    }
    if exps.p_le_q:
        defaulted = a is None
        if defaulted:
            a = a_star
        if not a > 0.0:
            raise ParameterOutOfRange("a must be positive")
        e = math.exp(a**2 / (2.0 * d)) / (sigma * _ROOT_2PI)
        ka = (2.0 * alpha / a) ** alpha
        params["a"] = a
        if defaulted:
            # optimal quantizer rate: (2e/pi)^(alpha/2), independent of sigma, lam
            fctr = (2.0 * math.e / math.pi) ** (alpha / 2.0)
            return FactorReport(
                e_pq=e, kappa_mass_alpha=ka, omega_mass_alpha=oa, fctr=fctr,
                kind="exact-closed-form", params=params,
            )
        return _report_closed(e, ka, oa, "exact-closed-form", params)
    if a is None:
        raise ParameterOutOfRange("a is required when p > q")
    if not a > 0.0:
        raise ParameterOutOfRange("a must be positive")
    r = exps.r
    gap = alpha - r
    arg = a * r / (alpha * math.sqrt(2.0 * d * gap))
    inner = (
        (a / alpha)
        * (sigma * _ROOT_2PI) ** (-1.0 / gap)
        * 0.5
        * math.sqrt(2.0 * math.pi * gap / d)
        * math.exp(a**2 * r**2 / (2.0 * d * alpha**2 * gap))
        * (1.0 + erf(arg))
    )
    e = inner**gap
    ka = (2.0 * alpha / a) ** alpha
    params["a"] = a
    return _report_closed(e, ka, oa, "exact-closed-form", params)


def fctr_gauss_exp(
    sigma: float, lam: float, exps: ProblemExponents, a: Optional[float] = None
) -> FactorReport:
    """Gaussian weight over exponential shape e^{-|x|/lam}, quantizer e^{-a|x|}."""
    if not (sigma > 0.0 and lam > 0.0):
        raise ParameterOutOfRange("sigma and lam must be positive")
    alpha = exps.alpha
    oa = (
        (sigma * math.sqrt(2.0 * math.pi * alpha)) ** alpha
        / (sigma * _ROOT_2PI)
        * math.exp(sigma**2 / (2.0 * lam**2))
        * (1.0 + erf(sigma / (lam * math.sqrt(2.0 * alpha)))) ** alpha
    )
    a_star = (math.sqrt(1.0 + 4.0 * alpha * lam**2 / sigma**2) - 1.0) / (2.0 * lam)
    params = {
        "sigma": sigma, "lam": lam, "p": exps.p, "q": exps.q, "r": exps.r,
        "alpha": alpha, "a_star": a_star,
    }
    if exps.p_le_q:
        if a is None:
            a = a_star
        if not a > 0.0:
            raise ParameterOutOfRange("a must be positive")
        e = math.exp(sigma**2 * (a + 1.0 / lam) ** 2 / 2.0) / (sigma * _ROOT_2PI)
        ka = (2.0 * alpha / a) ** alpha
        params["a"] = a
        return _report_closed(e, ka, oa, "exact-closed-form", params)
    if a is None:
        raise ParameterOutOfRange("a is required when p > q")
    if not a > 0.0:
        raise ParameterOutOfRange("a must be positive")
    r = exps.r
    gap = alpha - r
    slope = 1.0 / lam + a * r / alpha
    inner = (
        (a / alpha)
        * (sigma * _ROOT_2PI) ** (-1.0 / gap)
        * 0.5
        * sigma
        * math.sqrt(2.0 * math.pi * gap)
        * math.exp(sigma**2 * slope**2 / (2.0 * gap))
        * (1.0 + erf(sigma * slope / math.sqrt(2.0 * gap)))
    )
    e = inner**gap
    ka = (2.0 * alpha / a) ** alpha
    params["a"] = a
    return _report_closed(e, ka, oa, "exact-closed-form", params)


def solve_c_star(alpha: float, sigma: float) -> float:
    """The root c > max(alpha, 1) of c(c-1)(c-alpha) = alpha^2/sigma^2."""
    if not (alpha > 0.0 and sigma > 0.0):
        raise ParameterOutOfRange("alpha and sigma must be positive")
    target = alpha**2 / sigma**2

    def g(c: float) -> float:
        return c * (c - 1.0) * (c - alpha) - target

    lo = max(alpha, 1.0)
    width = 1.0
    hi = lo + width
    for _ in range(200):
        if g(hi) > 0.0:
            break
        width *= 2.0
        hi = lo + width
    else:
        raise NonConvergence("could not bracket the cubic root")
    return find_root(g, Interval(lo, hi), Tolerance(rel=1e-13, abs=1e-300))


def _lognormal_omega_mass_alpha(sigma: float, mu: float, alpha: float) -> float:
    return (
        (sigma * math.sqrt(2.0 * math.pi * alpha)) ** alpha
        / (sigma * _ROOT_2PI)
        * math.exp(sigma**2 * (alpha - 1.0) ** 2 / 2.0 + mu * (alpha - 1.0))
    )


def fctr_lognormal_pleq(sigma: float, mu: float, alpha: float) -> FactorReport:
    """Log-normal weight on (0, inf) with the flat-then-power quantizer, p <= q.

    The reported value is independent of mu: the e^{mu(alpha-1)} factors of the
    masses cancel against the supremum's e^{-mu}.
    """
    if not sigma > 0.0:
        raise ParameterOutOfRange("sigma must be positive")
    if not alpha >= 1.0:
        raise ParameterOutOfRange(f"alpha must be at least 1, got {alpha}")
    use_cstar = alpha >= 2.0 or 2.0 * (2.0 - alpha) <= alpha**2 / sigma**2
    if use_cstar:
        c = solve_c_star(alpha, sigma)
        fctr = (c / ((c - alpha) * sigma * math.sqrt(2.0 * math.pi * alpha))) ** alpha * math.exp(
            sigma**2 * ((c - 1.0) ** 2 - (alpha - 1.0) ** 2) / 2.0
        )
    else:
        c = 2.0
        fctr = (2.0 / ((2.0 - alpha) * sigma * math.sqrt(2.0 * math.pi * alpha))) ** alpha * math.exp(
            sigma**2 * (1.0 - (alpha - 1.0) ** 2) / 2.0
        )
    ka = (c / (c - alpha)) ** alpha * math.exp(alpha * mu)
    oa = _lognormal_omega_mass_alpha(sigma, mu, alpha)
    e = math.exp(-mu + sigma**2 * max(1.0, (c - 1.0) ** 2) / 2.0) / (sigma * _ROOT_2PI)
    return FactorReport(
        e_pq=e, kappa_mass_alpha=ka, omega_mass_alpha=oa, fctr=fctr,
        kind="exact-closed-form",
        params={"sigma": sigma, "mu": mu, "alpha": alpha, "c": c,
                "branch": "c-star" if use_cstar else "c=2"},
    )


def fctr_lognormal_int(
    sigma: float, mu: float, alpha: float, c: Optional[float] = None
) -> FactorReport:
    """Log-normal weight, integration exponents (p=inf, q=1, alpha=r+1).

    With c absent the penalty is minimized over c in (alpha, alpha+20]. The
    value is independent of mu.
    """
    if not sigma > 0.0:
        raise ParameterOutOfRange("sigma must be positive")
    if not alpha > 1.0:
        raise ParameterOutOfRange(f"integration case needs alpha > 1, got {alpha}")
    if c is not None and not c > alpha:
        raise ParameterOutOfRange(f"need c > alpha, got c={c}, alpha={alpha}")
    root_alpha = sigma * math.sqrt(2.0 * math.pi * alpha)

    def fctr_of(cc: float) -> float:
        z = sigma * (alpha - 1.0) * cc / (alpha * math.sqrt(2.0))
        try:
            bracket = 1.0 + math.exp(z * z) * (1.0 + erf(z))
            return (
                ((cc - alpha) * sigma * _ROOT_2PI / (2.0 * cc))
                * (cc / ((cc - alpha) * root_alpha)) ** alpha
                * math.exp(-(sigma**2) * (alpha - 1.0) ** 2 / 2.0)
                * bracket
            )
        except OverflowError:
            return math.inf

    if c is None:
        c, fctr = minimize_scalar(fctr_of, Interval(alpha + 1e-6, alpha + 20.0))
    else:
        fctr = fctr_of(c)
    ka = (c / (c - alpha)) ** alpha * math.exp(alpha * mu)
    oa = _lognormal_omega_mass_alpha(sigma, mu, alpha)
    e = fctr * oa / ka
    return FactorReport(
        e_pq=e, kappa_mass_alpha=ka, omega_mass_alpha=oa, fctr=fctr,
        kind="exact-closed-form",
        params={"sigma": sigma, "mu": mu, "alpha": alpha, "c": c},
    )


def fctr_bound_logistic(
    lam: float, b: float, alpha: float, a: Optional[float] = None
) -> FactorReport:
    """Logistic weight (rate lam) over e^{-b|x|} shape: upper bound only.

    The supremum of omega/kappa_a is exact; the omega mass enters through the
    closed-form lower bound lam (alpha/lam)^alpha, so fctr is an upper bound.
    """
    if not (lam > 0.0 and b > 0.0):
        raise ParameterOutOfRange("lam and b must be positive")
    if not lam > b:
        raise ParameterOutOfRange(f"need lam > b, got lam={lam}, b={b}")
    if not alpha >= 1.0:
        raise ParameterOutOfRange(f"alpha must be at least 1, got {alpha}")
    x_root = None
    if a is None:
        cap = 1.0 - b / lam

        def growth(x: float) -> float:
            return x * (math.log(1.0 + b / lam + x) - math.log(1.0 - b / lam - x)) - alpha

        hi = cap * (1.0 - 1e-12)
        if growth(hi) <= 0.0:
            a = lam - b
        else:
            x_root = find_root(growth, Interval(cap * 1e-12, hi), Tolerance(rel=1e-12, abs=1e-300))
            a = x_root * lam
    if not (a > 0.0 and a <= lam - b + 1e-9 * lam):
        raise ParameterOutOfRange(f"need 0 < a <= lam - b, got a={a}")
    s = (a + b) / lam
    if s > 1.0:
        s = 1.0
    if s == 1.0:
        big_g = 4.0
    else:
        big_g = (1.0 + s) ** (1.0 + s) * (1.0 - s) ** (1.0 - s)
    e = lam * big_g / 4.0
    ka = (2.0 * alpha / a) ** alpha
    oa = lam * (alpha / lam) ** alpha
    fctr = (2.0 * lam / a) ** alpha * big_g / 4.0
    return FactorReport(
        e_pq=e, kappa_mass_alpha=ka, omega_mass_alpha=oa, fctr=fctr,
        kind="upper-bound",
        params={"lam": lam, "b": b, "alpha": alpha, "a": a, "x": x_root},
    )


def fctr_bound_student(
    nu: float,
    b: float,
    alpha: float,
    a: Optional[float] = None,
    exps: Optional[ProblemExponents] = None,
) -> FactorReport:
    """Student weight pair with quantizer (1+|x|)^{-a}.

    Exact whenever p <= q (pass exps to assert that); otherwise reported as an
    upper bound. With a absent, the grid a = alpha + k/10 in (alpha, nu+1-b]
    is searched for the smallest bound.
    """
    if not (nu > 0.0 and b >= 0.0 and alpha > 0.0):
        raise ParameterOutOfRange("need nu > 0, b >= 0, alpha > 0")
    edge = nu + 1.0 - b
    if not edge > alpha:
        raise ParameterOutOfRange(f"need nu+1-b > alpha, got {edge} <= {alpha}")
    mu = (edge - alpha) / alpha
    t_nu = math.exp(_log_student_norm(nu))
    t_mu = math.exp(_log_student_norm(mu))
    oa = t_nu * (math.sqrt(nu) / (t_mu * math.sqrt(mu))) ** alpha

    def sup_of(aa: float) -> float:
        if abs(aa - edge) <= 1e-12 * edge:
            return t_nu * (1.0 + nu) ** (edge / 2.0)
        x_star = (math.sqrt(edge**2 + 4.0 * aa * nu * (edge - aa)) - edge) / (
            2.0 * (nu + 1.0 - aa - b)
        )
        return t_nu * (1.0 + x_star) ** aa * (1.0 + x_star**2 / nu) ** (-edge / 2.0)

    def bound_of(aa: float) -> float:
        return (2.0 * alpha / (aa - alpha)) ** alpha * sup_of(aa) / oa

    if a is None:
        kmax = int(math.floor((edge - alpha) * 10.0 + 1e-9))
        if kmax < 1:
            raise ParameterOutOfRange("no grid point a = alpha + k/10 lies in (alpha, nu+1-b]")
        best_a, best = None, math.inf
        for k in range(1, kmax + 1):
            aa = alpha + k / 10.0
            v = bound_of(aa)
            if v < best:
                best_a, best = aa, v
        a = best_a
    if not (a > alpha and a <= edge + 1e-12 * edge):
        raise ParameterOutOfRange(f"need alpha < a <= nu+1-b, got a={a}")
    e = sup_of(a)
    ka = (2.0 * alpha / (a - alpha)) ** alpha
    kind = "exact-closed-form" if (exps is not None and exps.p_le_q) else "upper-bound"
    return FactorReport(
        e_pq=e, kappa_mass_alpha=ka, omega_mass_alpha=oa, fctr=ka * e / oa,
        kind=kind,
        params={"nu": nu, "b": b, "alpha": alpha, "a": a, "mu": mu, "grid_step": 0.1},
    )


def theorem1_bound(
    rho: WeightFunction,
    psi: WeightFunction,
    kappa: WeightFunction,
    exps: ProblemExponents,
    n: int,
    seminorm: float,
    tol: Tolerance = DEFAULT_TOL,
) -> float:
    """c1 · ‖kappa^{1/alpha}‖₁^alpha · E · seminorm · n^{-r+(1/p-1/q)+}."""
    if not (isinstance(n, int) and n >= 1):
        raise ParameterOutOfRange(f"n must be a positive integer, got {n}")
    if not seminorm >= 0.0:
        raise ParameterOutOfRange("seminorm must be nonnegative")
    alpha = exps.alpha
    omega = omega_of(rho, psi)
    dom = _shared_domain(omega, kappa)
    e = e_pq_numeric(omega, kappa, exps, tol)
    if e == math.inf:
        raise InfiniteFactor("mismatch functional is infinite; the bound is vacuous")
    mass = quantizer_mass(kappa, alpha, tol=tol, domain=dom)
    return c1_constant(exps) * mass**alpha * e * seminorm * float(n) ** exps.rate_exponent
