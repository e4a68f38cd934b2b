"""Exception types raised across the package."""


class ConvMDSError(Exception):
    """Base class for all package errors."""


class NotPrimeError(ConvMDSError, ValueError):
    pass


class FieldOverflowError(ConvMDSError, ValueError):
    pass


class FieldMismatchError(ConvMDSError, TypeError):
    """Operands live in different fields."""


class DivisionByZeroError(ConvMDSError, ZeroDivisionError):
    pass


class ZeroElementError(ConvMDSError, ValueError):
    pass


class BothZeroError(ConvMDSError, ValueError):
    pass


class ZeroScaleError(ConvMDSError, ValueError):
    pass


class BadDimensionsError(ConvMDSError, ValueError):
    pass


class BadCoefficientError(ConvMDSError, ValueError):
    pass


class RankDeficientError(ConvMDSError, ValueError):
    pass


class UnsupportedKError(ConvMDSError, ValueError):
    pass


class BadParametersError(ConvMDSError, ValueError):
    pass


class StateSpaceTooLargeError(ConvMDSError, ValueError):
    pass


class BudgetExceededError(ConvMDSError, ValueError):
    pass


class NotPrimitiveError(ConvMDSError, ValueError):
    pass


class UnsupportedFieldSizeError(ConvMDSError, ValueError):
    pass


class ZeroLeadRowError(ConvMDSError, ValueError):
    pass


class BadFieldError(ConvMDSError, ValueError):
    pass


class InvalidCodeFileError(ConvMDSError, ValueError):
    """A code description file violates one of its format invariants."""


class ConsistencyError(ConvMDSError, RuntimeError):
    """An internal cross-check failed (a bug, never bad input)."""
