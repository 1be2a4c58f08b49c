"""Exception types shared across the package."""


class GoatError(Exception):
    """Base class for errors raised by this package."""


class DomainError(GoatError, ValueError):
    """An argument lies outside the domain a routine is specified for."""


class ConvergenceError(GoatError, ArithmeticError):
    """An iterative scheme exhausted its budget before reaching tolerance."""


class BracketError(GoatError, ArithmeticError):
    """A root finder was handed an interval that does not bracket a sign change."""


class ContourError(GoatError, ArithmeticError):
    """A contour integral produced an unusable value (non-finite, degenerate,
    or inconsistent with the expected zero count)."""
