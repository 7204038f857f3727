"""Exception hierarchy shared by every module."""


class LusztigConesError(Exception):
    """Base class for all errors raised by this package."""


class InputError(LusztigConesError, ValueError):
    """Malformed or out-of-range user input."""


class DomainError(LusztigConesError, ValueError):
    """Input is well formed but outside the domain of the operation."""


class CapacityError(LusztigConesError):
    """Requested rank exceeds the configured enumeration limit."""


class InvariantViolation(LusztigConesError, AssertionError):
    """An internal consistency check failed. Always a bug."""
