"""Exception types raised across the package."""


class ConcurrenceError(Exception):
    """Base class for all package errors."""


class InvalidDimensionError(ConcurrenceError, ValueError):
    pass


class NormalizationError(ConcurrenceError, ValueError):
    pass


class DensityMatrixError(ConcurrenceError, ValueError):
    """Matrix is not Hermitian, not unit trace, or not positive semidefinite."""


class DomainError(ConcurrenceError, ValueError):
    """Arguments outside the domain where a closed-form relation applies."""


class NumericalError(ConcurrenceError, ArithmeticError):
    """An iterative routine failed to converge or produced an invalid spectrum."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class StateFormatError(ConcurrenceError, ValueError):
    """A state file could not be parsed."""
