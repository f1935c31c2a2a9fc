"""
cost_interfaces.py

This module defines the abstract interface for uniformly posterior separable
information costs. A cost is a strictly convex function phi on beliefs, anchored
at a prior, whose expectation under a distribution over posteriors is the static
cost of acquiring that distribution.

Classes:
    CostFunctionInterface: Abstract base class every cost family implements. It
        fixes the derivative contract (phi, phi_prime, phi_double_prime), the
        evaluation domain and divergence behavior, and provides the operations
        that only depend on that contract: static cost of a finite distribution,
        the flow cost whose dynamic problem has phi as its static cost, the
        Bregman gap used for the minimal interior reward, and the "certainty is
        prohibitively costly" predicate.

Usage:
    Concrete families live in src.costs. All evaluation methods accept a float or
    a numpy array and return the same shape.

Note:
    Only differences of phi matter for Bayes-plausible distributions, so families
    may differ from one another by a term affine in x.
"""

from abc import ABC, abstractmethod
from collections.abc import Callable, Sequence
from typing import Literal, TypeVar

import numpy as np
from numpy.typing import NDArray

from src.abstractions.errors import DivergenceError, DomainError

FloatOrArray = TypeVar("FloatOrArray", float, NDArray[np.float64])


class CostFunctionInterface(ABC):
    """
    Abstract base class for a uniformly posterior separable cost anchored at a prior.

    Implementations must be immutable after construction so that instances can be
    shared between worker threads.
    """

    def __init__(self, prior: float) -> None:
        if not 0.0 < prior < 1.0:
            raise DomainError(f"Cost anchor prior must be interior, got {prior}")
        self._prior = float(prior)

    @property
    def prior(self) -> float:
        return self._prior

    @property
    @abstractmethod
    def family(self) -> str:
        """Short family name used in reports."""
        raise NotImplementedError

    @property
    @abstractmethod
    def diverges_at_endpoints(self) -> bool:
        """True when phi_prime is unbounded at 0 and 1."""
        raise NotImplementedError

    @property
    def domain(self) -> tuple[float, float]:
        """Closed interval on which phi and phi_prime are finite."""
        return (0.0, 1.0)

    @abstractmethod
    def phi(self, x: FloatOrArray) -> FloatOrArray:
        raise NotImplementedError

    @abstractmethod
    def phi_prime(self, x: FloatOrArray) -> FloatOrArray:
        raise NotImplementedError

    @abstractmethod
    def phi_double_prime(self, x: FloatOrArray) -> FloatOrArray:
        raise NotImplementedError

    @abstractmethod
    def reanchored(self, prior: float) -> "CostFunctionInterface":
        """Return the same family anchored at a different prior."""
        raise NotImplementedError

    def _reject_endpoints(
        self,
        x: float | NDArray[np.float64],
        what: str,
        at_zero: Literal["+inf", "-inf"],
        at_one: Literal["+inf", "-inf"],
    ) -> None:
        values = np.asarray(x, dtype=float)
        if np.any(values <= 0.0):
            raise DivergenceError(f"{self.family} {what} evaluated at the lower endpoint", 0.0, at_zero)
        if np.any(values >= 1.0):
            raise DivergenceError(f"{self.family} {what} evaluated at the upper endpoint", 1.0, at_one)

    def static_cost(self, support: Sequence[float], weights: Sequence[float], tolerance: float = 1e-9) -> float:
        """
        Expected value of phi under a finite distribution over posteriors.

        Args:
            support: Posterior beliefs.
            weights: Nonnegative probabilities attached to each posterior.
            tolerance: Allowed deviation of the weight total from one.

        Raises:
            DomainError: If the weights are negative or do not sum to one.
        """
        xs = np.asarray(support, dtype=float)
        ws = np.asarray(weights, dtype=float)
        if xs.shape != ws.shape:
            raise DomainError("Support and weights must have the same length")
        if np.any(ws < 0.0) or abs(float(ws.sum()) - 1.0) > tolerance:
            raise DomainError(f"Weights must be nonnegative and sum to 1, got total {ws.sum():.12g}")
        active = ws > 0.0
        return float(np.dot(ws[active], self.phi(xs[active])))

    def flow_cost_preimage(self, sigma: float) -> Callable[[FloatOrArray], FloatOrArray]:
        """
        Flow cost c with c(q) = 2 phi''(q) (q(1-q))^2 / sigma^2, whose dynamic
        sampling problem has this instance as its static cost.
        """
        if sigma <= 0.0:
            raise DomainError(f"sigma must be positive, got {sigma}")
        scale = 2.0 / sigma**2

        def flow_cost(q: FloatOrArray) -> FloatOrArray:
            return scale * self.phi_double_prime(q) * (q * (1.0 - q)) ** 2

        return flow_cost

    def bregman_gap(self, x: float, anchor: float) -> float:
        """phi(x) - phi(anchor) - (x - anchor) phi'(anchor)."""
        return float(self.phi(x) - self.phi(anchor) - (x - anchor) * self.phi_prime(anchor))

    def certainty_prohibitively_costly(self, reward: float, threshold: float) -> bool:
        """
        Whether reaching certainty of innocence is never optimal at this reward.

        Families whose slope diverges at the endpoints always qualify. Bounded
        families qualify when the first order residual is negative at belief 0.
        """
        if self.diverges_at_endpoints:
            return True
        lower = self.domain[0]
        residual = self.phi(lower) + (threshold - lower) * self.phi_prime(lower) + reward - self.phi(threshold)
        return bool(residual < 0.0)
