"""
abstractions module
Domain module: defines core interfaces, validation contracts, and the error hierarchy.

This includes:
- Abstract interfaces for application behavior (e.g. AppInterface)
- Abstract classes for information costs (e.g. CostFunctionInterface)
- Protocols for Duck Typing (e.g. ControllerFunction)
- Exceptions shared by every layer (e.g. DomainError, NumericError)
"""

from .controller_protocols import ControllerFunction, protocol_checker
from .cost_interfaces import CostFunctionInterface, FloatOrArray
from .errors import (
    BiasedEvidenceError,
    DivergenceError,
    DomainError,
    NumericError,
    VerificationFailure,
)
from .framework_interfaces import AppInterface


__all__ = [

    "AppInterface",
    "BiasedEvidenceError",
    "ControllerFunction",
    "CostFunctionInterface",
    "DivergenceError",
    "DomainError",
    "FloatOrArray",
    "NumericError",
    "VerificationFailure",
    "protocol_checker",

]
