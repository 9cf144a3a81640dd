"""Exception types shared across the package."""

from __future__ import annotations


class ShiftSpaceError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(ShiftSpaceError, ValueError):
    """A numeric or structural parameter lies outside its legal domain."""


class ParseError(ShiftSpaceError, ValueError):
    """Block text or a spec file is malformed."""


class OutOfAlphabetError(ShiftSpaceError, ValueError):
    """A symbol value does not fit in the declared alphabet."""


class ValidationError(ShiftSpaceError, ValueError):
    """One or more invariants of a shift-space description are violated.

    Carries every violation found, not just the first one.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class ResourceLimitError(ShiftSpaceError, RuntimeError):
    """A computation would exceed a configured size cap."""


class EmptyShiftSpaceError(ShiftSpaceError, ValueError):
    """The shift space contains no bi-infinite sequences."""


class ConvergenceError(ShiftSpaceError, ArithmeticError):
    """An iterative numeric method did not reach the requested tolerance.

    The last estimate, the residual at that estimate, and the iteration
    count are kept so callers can report partial progress.
    """

    def __init__(self, message, *, last_estimate=None, residual=None, iterations=None):
        super().__init__(message)
        self.last_estimate = last_estimate
        self.residual = residual
        self.iterations = iterations
