"""Weighted piecewise-polynomial approximation and integration on unbounded
domains, with quantizer-based knot placement and mismatch penalties."""

from .errors import (
    DomainError,
    InfiniteFactor,
    MissingDerivative,
    MonotonicityUndeclared,
    NoSignChange,
    NonConvergence,
    NonIntegrableQuantizer,
    OutOfSpan,
    ParameterOutOfRange,
    QknotsError,
    WrongExponent,
)
from .numerics import (
    DEFAULT_TOL,
    HALF_LINE,
    REAL_LINE,
    IntegrationResult,
    Interval,
    Tolerance,
    erf,
    find_root,
    integrate,
    minimize_scalar,
    sup_on,
)
from .core import (
    ConstantOne,
    ExponentialKernel,
    ExponentialShape,
    ExponentialShapeB,
    FunctionWithDerivatives,
    GaussianDensity,
    GaussianShape,
    GenericPositive,
    LogNormalDensity,
    LogNormalQuantizer,
    LogisticDensity,
    ProblemExponents,
    RatioWeight,
    StudentDensity,
    StudentQuantizer,
    StudentShape,
    WeightFunction,
    alpha,
    c1_constant,
    omega_of,
    weight_eval,
)
from .quantizer import (
    KnotVector,
    knots_halfline,
    knots_lognormal,
    knots_realline,
    quantizer_mass,
)
from .approx import (
    PiecewisePolynomial,
    approximation_error,
    build_lagrange,
    build_taylor,
    eval_piecewise,
    eval_piecewise_many,
    smoothness_seminorm,
    weighted_Lq_norm,
)
from .quadrature import (
    QuadratureResult,
    StudyRow,
    convergence_study,
    integrate_weighted,
)
from .factor import (
    FactorReport,
    e_pq_numeric,
    fctr_bound_logistic,
    fctr_bound_student,
    fctr_example_gaussian_variance,
    fctr_gauss_exp,
    fctr_gauss_gauss,
    fctr_lognormal_int,
    fctr_lognormal_pleq,
    fctr_numeric,
    solve_c_star,
    theorem1_bound,
)
from ._kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ConstantOne",
    "DEFAULT_TOL",
    "DomainError",
    "ExponentialKernel",
    "ExponentialShape",
    "ExponentialShapeB",
    "FactorReport",
    "FunctionWithDerivatives",
    "GaussianDensity",
    "GaussianShape",
    "GenericPositive",
    "HALF_LINE",
    "InfiniteFactor",
    "IntegrationResult",
    "Interval",
    "KnotVector",
    "LogNormalDensity",
    "LogNormalQuantizer",
    "LogisticDensity",
    "MissingDerivative",
    "MonotonicityUndeclared",
    "NoSignChange",
    "NonConvergence",
    "NonIntegrableQuantizer",
    "OutOfSpan",
    "ParameterOutOfRange",
    "PiecewisePolynomial",
    "ProblemExponents",
    "QknotsError",
    "QuadratureResult",
    "RatioWeight",
    "REAL_LINE",
    "StudentDensity",
    "StudentQuantizer",
    "StudentShape",
    "StudyRow",
    "Tolerance",
    "WeightFunction",
    "WrongExponent",
    "alpha",
    "approximation_error",
    "build_lagrange",
    "build_taylor",
    "c1_constant",
    "convergence_study",
    "e_pq_numeric",
    "erf",
    "eval_piecewise",
    "eval_piecewise_many",
    "fctr_bound_logistic",
    "fctr_bound_student",
    "fctr_example_gaussian_variance",
    "fctr_gauss_exp",
    "fctr_gauss_gauss",
    "fctr_lognormal_int",
    "fctr_lognormal_pleq",
    "fctr_numeric",
    "find_root",
    "integrate",
    "integrate_weighted",
    "knots_halfline",
    "knots_lognormal",
    "knots_realline",
    "minimize_scalar",
    "omega_of",
    "quantizer_mass",
    "smoothness_seminorm",
    "solve_c_star",
    "sup_on",
    "theorem1_bound",
    "weight_eval",
    "weighted_Lq_norm",
]
