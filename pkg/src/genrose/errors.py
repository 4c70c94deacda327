"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where a formula is defined."""


class QuadratureError(ArithmeticError):
    """A quadrature rule could not reach the requested tolerance.

    The best estimate and its error bound are kept on the exception so
    callers can decide whether a near miss is still usable.
    """

    def __init__(self, message, estimate=None, error=None):
        super().__init__(message)
        self.estimate = estimate
        self.error = error
