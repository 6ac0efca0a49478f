"""Exception types shared across the package."""


class HigherCharError(Exception):
    """Base class for all package errors."""


class InputError(HigherCharError):
    """Malformed input: bad vertex ids, unparseable files, invalid parameters."""

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class DomainError(HigherCharError):
    """A value violates an operation's precondition (e.g. simplex not in complex)."""


class ResourceBudgetError(HigherCharError):
    """A configurable work budget was exhausted before the operation finished."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class SingularMatrixError(HigherCharError):
    """Matrix inversion was requested for a singular matrix."""
