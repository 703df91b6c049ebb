"""Exception hierarchy used across the package."""

from __future__ import annotations


class TrigApproxError(Exception):
    """Base class for every error raised by :mod:`trigapprox`."""


class ValidationError(TrigApproxError, ValueError):
    """A parameter lies outside its admissible range."""


class ShapeError(TrigApproxError, ValueError):
    """Sequence lengths or orders do not match."""


class MultiplierConditionError(ValidationError):
    """A multiplier row violates the structural conditions on lambda_0, mu_0."""


class MembershipError(ValidationError):
    """A function does not belong to the unit ball it was declared in."""


class TruncationError(TrigApproxError, ArithmeticError):
    """An infinite series or integral could not be certified to the requested tolerance.

    Attributes
    ----------
    achieved : float
        Best error bound that was reached before giving up.
    """

    def __init__(self, message: str, achieved: float = float("inf")):
        super().__init__(message)
        self.achieved = achieved


class PreconditionError(TrigApproxError):
    """A hypothesis required by an evaluator does not hold."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class DegenerateInputError(TrigApproxError, ValueError):
    """The input is degenerate (e.g. an identically zero kernel)."""
