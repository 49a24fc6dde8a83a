"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the function."""


class IntegrandError(ArithmeticError):
    """The integrand returned a non-finite value."""

    def __init__(self, x, value):
        super().__init__(f"integrand returned {value!r} at x={x!r}")
        self.x = x
        self.value = value


class ConvergenceError(ArithmeticError):
    """An iterative method stopped before reaching its tolerance.

    The best estimate available at the time of failure is kept on the
    exception as ``best`` so callers can still inspect it.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class OutputError(OSError):
    """Writing an output file failed.  ``filename`` holds the path."""
