"""Exception types shared across the package."""


class QknotsError(Exception):
    """Base class for all package-specific errors."""


class NonConvergence(QknotsError):
    """An iterative routine exhausted its subdivision or iteration budget."""


class DomainError(QknotsError):
    """A function returned a non-finite value, or a point lies outside a weight's domain."""


class NoSignChange(QknotsError, ValueError):
    """Root bracket endpoints have the same sign."""


class MissingDerivative(QknotsError, ValueError):
    """A construction needs a higher derivative than the function supplies."""


class OutOfSpan(QknotsError, ValueError):
    """Evaluation point lies outside the knot span."""


class NonIntegrableQuantizer(QknotsError):
    """The quantizer's normalized power has a divergent integral."""


class MonotonicityUndeclared(QknotsError, ValueError):
    """A generic weight is used as a quantizer without the required monotonicity declaration."""


class ParameterOutOfRange(QknotsError, ValueError):
    """A parameter violates a documented validity constraint."""


class WrongExponent(QknotsError, ValueError):
    """An operation was invoked with exponents outside its contract (e.g. q != 1)."""


class InfiniteFactor(QknotsError):
    """The mismatch functional is infinite, so the requested bound is vacuous."""
