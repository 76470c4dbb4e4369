"""Exception types shared across the package.

The CLI maps these onto process exit codes, so library code should raise the
most specific one that applies.
"""


class ScarpiError(Exception):
    """Base class for every error raised by this package."""


class DomainError(ScarpiError, ValueError):
    """A function was evaluated at a point outside its domain."""


class ValidationError(ScarpiError, ValueError):
    """Model inputs violate their admissibility constraints."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class ConfigurationError(ScarpiError, ValueError):
    """An inversion or run configuration cannot be honoured."""


class NumericalFailure(ScarpiError, ArithmeticError):
    """A numerical method produced a non-finite or inconsistent result."""
