"""Exception types shared across the package."""


class WeylClosureError(Exception):
    """Base class for all library errors."""


class EvaluationAtPole(WeylClosureError):
    """A rational function was evaluated at a zero of its denominator."""


class DegreeExceeded(WeylClosureError):
    """An operator has derivatives beyond the requested truncation order."""


class SBelowS0(WeylClosureError):
    """A jet order below the maximal degree of the basis was requested."""


class ZeroOperator(WeylClosureError):
    """Head data was requested for the zero operator."""


class InvalidInput(WeylClosureError):
    """An argument violates a structural precondition (shape, field, ...)."""


class ParseError(WeylClosureError):
    """Syntax error in operator or system-file text, with a position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
