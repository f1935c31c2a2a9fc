"""
errors.py

Exception hierarchy shared by every layer of the package.

Classes:
    BiasedEvidenceError: Root of the hierarchy.
    DomainError: A precondition or model condition does not hold.
    DivergenceError: A cost function was evaluated where it diverges.
    NumericError: Quadrature or bracketing failed.
    VerificationFailure: A checked claim did not hold.

Controllers translate these into exit codes (command line) and status codes (HTTP).
"""

from typing import Literal, Optional


class BiasedEvidenceError(Exception):
    """Base class for all errors raised by the package."""


class DomainError(BiasedEvidenceError, ValueError):
    """Raised when inputs violate a precondition of the model."""


class DivergenceError(DomainError):
    """
    Raised when a cost family is evaluated at an endpoint where it diverges.

    Attributes:
        endpoint: The belief (0.0 or 1.0) at which evaluation was attempted.
        direction: Sign of the divergence, "+inf" or "-inf".
    """

    def __init__(self, message: str, endpoint: float, direction: Literal["+inf", "-inf"]) -> None:
        super().__init__(f"{message} (diverges to {direction} at x={endpoint:g})")
        self.endpoint = endpoint
        self.direction = direction


class NumericError(BiasedEvidenceError, ArithmeticError):
    """
    Raised when a numerical routine cannot reach its tolerance.

    Attributes:
        achieved_tolerance: Error estimate reported by the failing routine, when known.
    """

    def __init__(self, message: str, achieved_tolerance: Optional[float] = None) -> None:
        if achieved_tolerance is not None:
            message = f"{message} (achieved tolerance {achieved_tolerance:.3e})"
        super().__init__(message)
        self.achieved_tolerance = achieved_tolerance


class VerificationFailure(BiasedEvidenceError):
    """Raised when a verification suite reports a failed claim."""
