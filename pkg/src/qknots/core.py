"""Problem description types: exponents, weight families, smooth functions.

Weight families evaluate through their logarithms so that ratios and
fractional powers of far-tail values stay well-defined (no 0/0 at points
where both weights underflow).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Tuple

from .errors import DomainError, MissingDerivative, ParameterOutOfRange
from .numerics import HALF_LINE, Interval, REAL_LINE

__all__ = [
    "ProblemExponents",
    "WeightFunction",
    "GaussianDensity",
    "ExponentialKernel",
    "GaussianShape",
    "ExponentialShape",
    "ConstantOne",
    "LogNormalDensity",
    "LogNormalQuantizer",
    "LogisticDensity",
    "ExponentialShapeB",
    "StudentDensity",
    "StudentShape",
    "StudentQuantizer",
    "GenericPositive",
    "RatioWeight",
    "FunctionWithDerivatives",
    "alpha",
    "c1_constant",
    "weight_eval",
    "omega_of",
]

_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)


def _inv(e: float) -> float:
    return 0.0 if e == math.inf else 1.0 / e


@dataclass(frozen=True)
class ProblemExponents:
    """Exponent triple (p, q, r); p and q may be math.inf, which is kept exact."""

    p: float
    q: float
    r: int

    def __post_init__(self):
        for name, e in (("p", self.p), ("q", self.q)):
            if not (e == math.inf or 1.0 <= e < math.inf):
                raise ParameterOutOfRange(f"{name} must lie in [1, inf], got {e}")
        if not (isinstance(self.r, int) and self.r >= 1):
            raise ParameterOutOfRange(f"r must be a positive integer, got {self.r}")
        if not self.alpha > 0.0:
            raise ParameterOutOfRange(f"alpha = {self.alpha} must be positive")

    @property
    def alpha(self) -> float:
        return self.r - _inv(self.p) + _inv(self.q)

    @property
    def p_conjugate(self) -> float:
        if self.p == 1.0:
            return math.inf
        if self.p == math.inf:
            return 1.0
        return self.p / (self.p - 1.0)

    @property
    def p_le_q(self) -> bool:
        return self.p <= self.q

    @property
    def rate_exponent(self) -> float:
        """Exponent of n in the worst-case rate: -r + max(0, 1/p - 1/q)."""
        return -self.r + max(0.0, _inv(self.p) - _inv(self.q))


def alpha(exps: ProblemExponents) -> float:
    """The combined exponent r - 1/p + 1/q (1/inf := 0)."""
    return exps.alpha


def c1_constant(exps: ProblemExponents) -> float:
    """Constant 1/((r-1)! ((r-1)p*+1)^{1/p*}), with the analytic limit 1 for p* = inf."""
    r = exps.r
    if r == 1:
        return 1.0
    pc = exps.p_conjugate
    root = 1.0 if pc == math.inf else ((r - 1) * pc + 1.0) ** (1.0 / pc)
    return 1.0 / (math.factorial(r - 1) * root)


class WeightFunction:
    """A strictly positive weight on an interval domain.

    Subclasses implement log_at; evaluation exponentiates it. The two
    quantizer-eligibility declarations are nonincreasing on the half line and
    symmetric-unimodal on the real line.
    """

    domain: Interval = REAL_LINE

    def log_at(self, x: float) -> float:
        raise NotImplementedError

    def __call__(self, x: float) -> float:
        return math.exp(self.log_at(x))

    def strictly_inside(self, x: float) -> bool:
        return self.domain.contains(x)

    @property
    def nonincreasing_halfline(self) -> bool:
        return False

    @property
    def symmetric_unimodal(self) -> bool:
        return False


@dataclass(frozen=True)
class GaussianDensity(WeightFunction):
    """(1/(sigma sqrt(2 pi))) exp(-(x-mu)^2 / (2 sigma^2)) on the real line."""

    sigma: float
    mu: float = 0.0
    domain: Interval = REAL_LINE

    def __post_init__(self):
        if not self.sigma > 0.0:
            raise ParameterOutOfRange("sigma must be positive")

    def log_at(self, x: float) -> float:
        z = (x - self.mu) / self.sigma
        return -0.5 * z * z - math.log(self.sigma) - _LOG_SQRT_2PI

    @property
    def nonincreasing_halfline(self) -> bool:
        return self.mu <= 0.0

    @property
    def symmetric_unimodal(self) -> bool:
        return self.mu == 0.0


@dataclass(frozen=True)
class ExponentialKernel(WeightFunction):
    """exp(-a |x|)."""

    a: float
    domain: Interval = REAL_LINE

    def __post_init__(self):
        if not self.a > 0.0:
            raise ParameterOutOfRange("a must be positive")

    def log_at(self, x: float) -> float:
        return -self.a * abs(x)

    @property
    def nonincreasing_halfline(self) -> bool:
        return True

    @property
    def symmetric_unimodal(self) -> bool:
        return True


@dataclass(frozen=True)
class GaussianShape(WeightFunction):
    """exp(-x^2 / (2 lam^2)); lam = inf gives the constant 1."""

    lam: float
    domain: Interval = REAL_LINE

    def __post_init__(self):
        if not self.lam > 0.0:
            raise ParameterOutOfRange("lam must be positive")

    def log_at(self, x: float) -> float:
        if self.lam == math.inf:
            return 0.0
        z = x / self.lam
        return -0.5 * z * z

    @property
    def nonincreasing_halfline(self) -> bool:
        return True

    @property
    def symmetric_unimodal(self) -> bool:
        return True


@dataclass(frozen=True)
class ExponentialShape(WeightFunction):
    """exp(-|x| / lam)."""

    lam: float
    domain: Interval = REAL_LINE

    def __post_init__(self):
        if not self.lam > 0.0:
            raise ParameterOutOfRange("lam must be positive")

    def log_at(self, x: float) -> float:
        return -abs(x) / self.lam

    @property
    def nonincreasing_halfline(self) -> bool:
        return True

    @property
    def symmetric_unimodal(self) -> bool:
        return True


@dataclass(frozen=True)
class ConstantOne(WeightFunction):
    """The constant weight 1 (domain may be restricted)."""

    domain: Interval = REAL_LINE

    def log_at(self, x: float) -> float:
        return 0.0

    @property
    def nonincreasing_halfline(self) -> bool:
        return True

    @property
    def symmetric_unimodal(self) -> bool:
        return True


@dataclass(frozen=True)
class LogNormalDensity(WeightFunction):
    """(1/(x sigma sqrt(2 pi))) exp(-(ln x - mu)^2 / (2 sigma^2)) on (0, inf)."""

    mu: float
    sigma: float
    domain: Interval = HALF_LINE

    def __post_init__(self):
        if not self.sigma > 0.0:
            raise ParameterOutOfRange("sigma must be positive")

    def log_at(self, x: float) -> float:
        if x <= 0.0:
            return -math.inf
        u = (math.log(x) - self.mu) / self.sigma
        return -0.5 * u * u - math.log(x * self.sigma) - _LOG_SQRT_2PI

    def strictly_inside(self, x: float) -> bool:
        return x > 0.0


@dataclass(frozen=True)
class LogNormalQuantizer(WeightFunction):
    """min(1, (x e^{-mu})^{-c}) on (0, inf): flat below e^mu, power decay above."""

    c: float
    mu: float = 0.0
    domain: Interval = HALF_LINE

    def __post_init__(self):
        if not self.c > 0.0:
            raise ParameterOutOfRange("c must be positive")

    def log_at(self, x: float) -> float:
        if x <= 0.0:
            return 0.0
        return -self.c * max(0.0, math.log(x) - self.mu)

    def strictly_inside(self, x: float) -> bool:
        return x > 0.0

    @property
    def nonincreasing_halfline(self) -> bool:
        return True


@dataclass(frozen=True)
class LogisticDensity(WeightFunction):
    """e^{x/nu} / (nu (1 + e^{x/nu})^2): logistic density with scale nu."""

    nu: float
    domain: Interval = REAL_LINE

    def __post_init__(self):
        if not self.nu > 0.0:
            raise ParameterOutOfRange("nu must be positive")

    def log_at(self, x: float) -> float:
        u = x / self.nu
        # log(1 + e^u) computed without overflow on either side
        soft = max(u, 0.0) + math.log1p(math.exp(-abs(u)))
        return u - math.log(self.nu) - 2.0 * soft

    @property
    def nonincreasing_halfline(self) -> bool:
        return True

    @property
    def symmetric_unimodal(self) -> bool:
        return True


@dataclass(frozen=True)
class ExponentialShapeB(WeightFunction):
    """exp(-b |x|)."""

    b: float
    domain: Interval = REAL_LINE

    def __post_init__(self):
        if not self.b > 0.0:
            raise ParameterOutOfRange("b must be positive")

    def log_at(self, x: float) -> float:
        return -self.b * abs(x)

    @property
    def nonincreasing_halfline(self) -> bool:
        return True

    @property
    def symmetric_unimodal(self) -> bool:
        return True


def _log_student_norm(nu: float) -> float:
    # ln T_nu with T_nu = Gamma((nu+1)/2) / (sqrt(nu pi) Gamma(nu/2))
    return math.lgamma(0.5 * (nu + 1.0)) - math.lgamma(0.5 * nu) - 0.5 * math.log(nu * math.pi)


@dataclass(frozen=True)
class StudentDensity(WeightFunction):
    """T_nu (1 + x^2/nu)^{-(nu+1)/2}."""

    nu: float
    domain: Interval = REAL_LINE

    def __post_init__(self):
        if not self.nu > 0.0:
            raise ParameterOutOfRange("nu must be positive")

    def log_at(self, x: float) -> float:
        return _log_student_norm(self.nu) - 0.5 * (self.nu + 1.0) * math.log1p(x * x / self.nu)

    @property
    def nonincreasing_halfline(self) -> bool:
        return True

    @property
    def symmetric_unimodal(self) -> bool:
        return True


@dataclass(frozen=True)
class StudentShape(WeightFunction):
    """(1 + x^2/nu)^{-b/2}."""

    nu: float
    b: float
    domain: Interval = REAL_LINE

    def __post_init__(self):
        if not (self.nu > 0.0 and self.b >= 0.0):
            raise ParameterOutOfRange("need nu > 0 and b >= 0")

    def log_at(self, x: float) -> float:
        return -0.5 * self.b * math.log1p(x * x / self.nu)

    @property
    def nonincreasing_halfline(self) -> bool:
        return True

    @property
    def symmetric_unimodal(self) -> bool:
        return True


@dataclass(frozen=True)
class StudentQuantizer(WeightFunction):
    """(1 + |x|)^{-a}."""

    a: float
    domain: Interval = REAL_LINE

    def __post_init__(self):
        if not self.a > 0.0:
            raise ParameterOutOfRange("a must be positive")

    def log_at(self, x: float) -> float:
        return -self.a * math.log1p(abs(x))

    @property
    def nonincreasing_halfline(self) -> bool:
        return True

    @property
    def symmetric_unimodal(self) -> bool:
        return True


@dataclass(frozen=True)
class GenericPositive(WeightFunction):
    """A user-supplied positive callable with an explicit monotonicity declaration.

    monotonicity: None, "nonincreasing" (on the half line), or
    "symmetric-unimodal" (on the real line). Undeclared weights may be
    integrated and divided but not used as quantizers.
    """

    fn: Callable[[float], float]
    domain: Interval = REAL_LINE
    monotonicity: Optional[str] = None

    def __post_init__(self):
        if self.monotonicity not in (None, "nonincreasing", "symmetric-unimodal"):
            raise ParameterOutOfRange(f"unknown monotonicity {self.monotonicity!r}")

    def __call__(self, x: float) -> float:
        v = self.fn(x)
        if math.isnan(v) or v < 0.0:
            raise DomainError(f"weight returned {v!r} at x={x!r}; must be positive")
        return v

    def log_at(self, x: float) -> float:
        v = self(x)
        return math.log(v) if v > 0.0 else -math.inf

    @property
    def nonincreasing_halfline(self) -> bool:
        return self.monotonicity in ("nonincreasing", "symmetric-unimodal")

    @property
    def symmetric_unimodal(self) -> bool:
        return self.monotonicity == "symmetric-unimodal"


@dataclass(frozen=True)
class RatioWeight(WeightFunction):
    """Pointwise ratio rho/psi, tagged when the pair has a known closed form."""

    rho: WeightFunction
    psi: WeightFunction
    domain: Interval = REAL_LINE
    tag: Optional[Tuple] = field(default=None)

    def log_at(self, x: float) -> float:
        return self.rho.log_at(x) - self.psi.log_at(x)

    def strictly_inside(self, x: float) -> bool:
        return self.rho.strictly_inside(x) and self.psi.strictly_inside(x)


def weight_eval(w: WeightFunction, x: float) -> float:
    """Pointwise value of w at x; DomainError outside the weight's domain."""
    if not w.strictly_inside(x):
        raise DomainError(f"x={x!r} lies outside the weight's domain [{w.domain.lo}, {w.domain.hi}]")
    return w(x)


def _ratio_tag(rho: WeightFunction, psi: WeightFunction) -> Optional[Tuple]:
    constant_psi = isinstance(psi, ConstantOne) or (
        isinstance(psi, GaussianShape) and psi.lam == math.inf
    )
    if isinstance(rho, GaussianDensity) and rho.mu == 0.0:
        if constant_psi:
            return ("gauss-gauss", rho.sigma, math.inf)
        if isinstance(psi, GaussianShape):
            return ("gauss-gauss", rho.sigma, psi.lam)
        if isinstance(psi, ExponentialShape):
            return ("gauss-exp", rho.sigma, psi.lam)
    if isinstance(rho, LogNormalDensity) and constant_psi:
        return ("lognormal", rho.mu, rho.sigma)
    if isinstance(rho, LogisticDensity) and isinstance(psi, ExponentialShapeB):
        return ("logistic-exp", 1.0 / rho.nu, psi.b)
    if isinstance(rho, StudentDensity) and isinstance(psi, StudentShape) and rho.nu == psi.nu:
        return ("student", rho.nu, psi.b)
    return None


def omega_of(rho: WeightFunction, psi: WeightFunction) -> RatioWeight:
    """The ratio rho/psi on the shared domain, tagged for closed-form dispatch."""
    dom = Interval(max(rho.domain.lo, psi.domain.lo), min(rho.domain.hi, psi.domain.hi))
    return RatioWeight(rho=rho, psi=psi, domain=dom, tag=_ratio_tag(rho, psi))


@dataclass(frozen=True)
class FunctionWithDerivatives:
    """f together with evaluators for its derivatives f^(0), ..., f^(k)."""

    evaluators: Tuple[Callable[[float], float], ...]
    domain: Interval = REAL_LINE

    def __post_init__(self):
        if len(self.evaluators) < 1:
            raise ParameterOutOfRange("at least the 0th derivative is required")

    def __call__(self, x: float) -> float:
        return self.evaluators[0](x)

    def derivative(self, k: int) -> Callable[[float], float]:
        if k >= len(self.evaluators):
            raise MissingDerivative(
                f"derivative {k} requested but only orders 0..{len(self.evaluators) - 1} supplied"
            )
        return self.evaluators[k]

    @property
    def orders(self) -> int:
        return len(self.evaluators)
