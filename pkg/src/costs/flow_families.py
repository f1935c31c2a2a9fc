"""
flow_families.py

Named flow costs c(y) for the dynamic sampling problem. Each maker takes a
positive coefficient and returns a callable that accepts floats or numpy arrays.

With the default coefficients the induced static costs are the closed-form
families: a constant flow gives the log-likelihood cost, a flow proportional to
the posterior variance gives the entropy cost, and a flow proportional to the
squared posterior variance gives the variance cost with the chosen kappa.
"""

from collections.abc import Callable
from typing import Literal

from src.abstractions.cost_interfaces import FloatOrArray
from src.abstractions.errors import DomainError

FlowName = Literal["constant", "variance_proportional", "variance_squared"]
FlowFunction = Callable[[FloatOrArray], FloatOrArray]


def constant_flow(coefficient: float) -> FlowFunction:
    def flow(y: FloatOrArray) -> FloatOrArray:
        return coefficient + 0.0 * y

    return flow


def variance_proportional_flow(coefficient: float) -> FlowFunction:
    def flow(y: FloatOrArray) -> FloatOrArray:
        return coefficient * y * (1.0 - y)

    return flow


def variance_squared_flow(coefficient: float) -> FlowFunction:
    def flow(y: FloatOrArray) -> FloatOrArray:
        return coefficient * (y * (1.0 - y)) ** 2

    return flow


FLOW_FAMILIES: dict[str, Callable[[float], FlowFunction]] = {
    "constant": constant_flow,
    "variance_proportional": variance_proportional_flow,
    "variance_squared": variance_squared_flow,
}


def default_coefficient(name: FlowName, sigma: float, kappa: float = 1.0) -> float:
    """Coefficient at which the named flow reproduces its closed-form static cost."""
    if sigma <= 0.0:
        raise DomainError(f"sigma must be positive, got {sigma}")
    match name:
        case "constant" | "variance_proportional":
            return 2.0 / sigma**2
        case "variance_squared":
            return 4.0 * kappa / sigma**2
    raise DomainError(f"Unknown flow family '{name}'")


def make_flow(name: FlowName, sigma: float, coefficient: float | None = None, kappa: float = 1.0) -> FlowFunction:
    if name not in FLOW_FAMILIES:
        raise DomainError(f"Unknown flow family '{name}'")
    if coefficient is None:
        coefficient = default_coefficient(name, sigma, kappa)
    if coefficient <= 0.0:
        raise DomainError(f"Flow coefficient must be positive, got {coefficient}")
    return FLOW_FAMILIES[name](coefficient)
