"""Exception types raised across the package."""


class WeylGateError(Exception):
    """Base class for all package errors."""


class DimensionError(WeylGateError, ValueError):
    """Shape mismatch or a size above a configured cap."""


class ValidationError(WeylGateError, ValueError):
    """An input violates a structural requirement (unitarity, anti-Hermiticity, ...)."""


class NotCompilableError(WeylGateError):
    """Target lies outside the generated Lie algebra.

    Attributes
    ----------
    residual : float
        Frobenius norm of the component of the target orthogonal to the closure.
    """

    def __init__(self, message, residual):
        super().__init__(message)
        self.residual = residual


class ProgramSyntaxError(WeylGateError, ValueError):
    """Processor program could not be parsed."""

    def __init__(self, message, line, column):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
