"""
implementations.py

Concrete uniformly posterior separable cost families.

Classes:
    VarianceCost: kappa (x - prior)^2.
    EntropyCost: Shannon entropy cost, anchored so that phi and phi' vanish at the prior.
    LogLikelihoodCost: Log-likelihood-ratio cost, anchored the same way.
    TsallisCost: Tsallis entropy cost in its displayed form (phi vanishes at the prior,
        phi' in general does not). At q = 1 it is kappa times the entropy cost.
    FlowCost: Static cost induced by a flow cost c and noise sigma, evaluated by
        nested adaptive quadrature on a cached node grid.

All evaluation methods are numpy-vectorized and use natural logarithms.
"""

from collections.abc import Callable

import numpy as np
from numpy.typing import NDArray
from scipy.integrate import quad  # type: ignore
from scipy.special import expit, logit, xlogy  # type: ignore

from src.abstractions.cost_interfaces import CostFunctionInterface, FloatOrArray
from src.abstractions.errors import DivergenceError, DomainError, NumericError
from src.models.settings_schemas import QuadratureSettings


def _check_unit_interval(x: float | NDArray[np.float64]) -> None:
    values = np.asarray(x, dtype=float)
    if np.any(values < 0.0) or np.any(values > 1.0):
        raise DomainError("Beliefs must lie in [0, 1]")


def _negentropy(x: FloatOrArray) -> FloatOrArray:
    return xlogy(x, x) + xlogy(1.0 - x, 1.0 - x)


class VarianceCost(CostFunctionInterface):
    """Posterior variance cost kappa (x - prior)^2."""

    def __init__(self, kappa: float, prior: float) -> None:
        super().__init__(prior)
        if kappa <= 0.0:
            raise DomainError(f"kappa must be positive, got {kappa}")
        self.kappa = float(kappa)

    family = "variance"  # type: ignore[assignment]
    diverges_at_endpoints = False  # type: ignore[assignment]

    def phi(self, x: FloatOrArray) -> FloatOrArray:
        _check_unit_interval(x)
        return self.kappa * (x - self.prior) ** 2

    def phi_prime(self, x: FloatOrArray) -> FloatOrArray:
        _check_unit_interval(x)
        return 2.0 * self.kappa * (x - self.prior)

    def phi_double_prime(self, x: FloatOrArray) -> FloatOrArray:
        _check_unit_interval(x)
        return 2.0 * self.kappa + 0.0 * x

    def reanchored(self, prior: float) -> "VarianceCost":
        return VarianceCost(self.kappa, prior)

    def reward_ratio(self, reward: float) -> float:
        """d = sqrt(v / kappa), the belief distance spanned by the optimal experiment."""
        if reward <= 0.0:
            raise DomainError(f"Reward must be positive, got {reward}")
        return float(np.sqrt(reward / self.kappa))


class EntropyCost(CostFunctionInterface):
    """Entropy cost; phi(x) is the Bregman divergence of negative entropy from the prior."""

    family = "entropy"  # type: ignore[assignment]
    diverges_at_endpoints = True  # type: ignore[assignment]

    def phi(self, x: FloatOrArray) -> FloatOrArray:
        _check_unit_interval(x)
        p = self.prior
        return _negentropy(x) - _negentropy(p) - logit(p) * (x - p)

    def phi_prime(self, x: FloatOrArray) -> FloatOrArray:
        self._reject_endpoints(x, "phi'", "-inf", "+inf")
        return logit(x) - logit(self.prior)

    def phi_double_prime(self, x: FloatOrArray) -> FloatOrArray:
        self._reject_endpoints(x, "phi''", "+inf", "+inf")
        return 1.0 / (x * (1.0 - x))

    def reanchored(self, prior: float) -> "EntropyCost":
        return EntropyCost(prior)


class LogLikelihoodCost(CostFunctionInterface):
    """Log-likelihood-ratio cost, the static cost of a constant flow cost."""

    family = "log_likelihood"  # type: ignore[assignment]
    diverges_at_endpoints = True  # type: ignore[assignment]

    @staticmethod
    def _level(x: FloatOrArray) -> FloatOrArray:
        return (2.0 * x - 1.0) * logit(x)

    @staticmethod
    def _slope(x: FloatOrArray) -> FloatOrArray:
        return 2.0 * logit(x) + (2.0 * x - 1.0) / (x * (1.0 - x))

    def phi(self, x: FloatOrArray) -> FloatOrArray:
        self._reject_endpoints(x, "phi", "+inf", "+inf")
        p = self.prior
        return self._level(x) - self._level(p) - self._slope(p) * (x - p)

    def phi_prime(self, x: FloatOrArray) -> FloatOrArray:
        self._reject_endpoints(x, "phi'", "-inf", "+inf")
        return self._slope(x) - self._slope(self.prior)

    def phi_double_prime(self, x: FloatOrArray) -> FloatOrArray:
        self._reject_endpoints(x, "phi''", "+inf", "+inf")
        return 1.0 / (x * (1.0 - x)) ** 2

    def reanchored(self, prior: float) -> "LogLikelihoodCost":
        return LogLikelihoodCost(prior)


class TsallisCost(CostFunctionInterface):
    """
    Tsallis cost kappa / (q - 1) (x^q + (1 - x)^q - prior^q - (1 - prior)^q).

    The slope at the prior is not zero unless q = 2 with prior 1/2, which leaves
    every Bayes-plausible cost unchanged.
    """

    family = "tsallis"  # type: ignore[assignment]

    def __init__(self, kappa: float, q: float, prior: float) -> None:
        super().__init__(prior)
        if kappa <= 0.0 or q <= 0.0:
            raise DomainError(f"Tsallis cost needs kappa > 0 and q > 0, got kappa={kappa}, q={q}")
        self.kappa = float(kappa)
        self.q = float(q)
        self._is_entropy = abs(self.q - 1.0) < 1e-12

    @property
    def diverges_at_endpoints(self) -> bool:  # type: ignore[override]
        return self.q <= 1.0

    def phi(self, x: FloatOrArray) -> FloatOrArray:
        _check_unit_interval(x)
        p = self.prior
        if self._is_entropy:
            return self.kappa * (_negentropy(x) - _negentropy(p))
        q = self.q
        return self.kappa / (q - 1.0) * (x**q + (1.0 - x) ** q - p**q - (1.0 - p) ** q)

    def phi_prime(self, x: FloatOrArray) -> FloatOrArray:
        if self.diverges_at_endpoints:
            self._reject_endpoints(x, "phi'", "-inf", "+inf")
        else:
            _check_unit_interval(x)
        if self._is_entropy:
            return self.kappa * logit(x)
        q = self.q
        return self.kappa * q / (q - 1.0) * (x ** (q - 1.0) - (1.0 - x) ** (q - 1.0))

    def phi_double_prime(self, x: FloatOrArray) -> FloatOrArray:
        if self.q < 2.0:
            self._reject_endpoints(x, "phi''", "+inf", "+inf")
        else:
            _check_unit_interval(x)
        if self._is_entropy:
            return self.kappa / (x * (1.0 - x))
        q = self.q
        return self.kappa * q * (x ** (q - 2.0) + (1.0 - x) ** (q - 2.0))

    def reanchored(self, prior: float) -> "TsallisCost":
        return TsallisCost(self.kappa, self.q, prior)


class FlowCost(CostFunctionInterface):
    """
    Static cost phi(q) = int_prior^q int_prior^x sigma^2 c(y) / (2 (y (1 - y))^2) dy dx.

    Cumulative values of phi' and phi are precomputed on a node grid that is uniform
    in log-odds and contains the prior; an evaluation adds one adaptive quadrature
    from the nearest node. The domain is clipped away from 0 and 1 and nothing is
    extrapolated beyond it.
    """

    family = "flow"  # type: ignore[assignment]
    diverges_at_endpoints = True  # type: ignore[assignment]

    def __init__(
        self,
        flow: Callable[[float], float],
        sigma: float,
        prior: float,
        quadrature: QuadratureSettings,
        name: str = "flow",
    ) -> None:
        super().__init__(prior)
        if sigma <= 0.0:
            raise DomainError(f"sigma must be positive, got {sigma}")
        clip = quadrature.clip
        if not clip < prior < 1.0 - clip:
            raise DomainError(f"Prior {prior} lies outside the quadrature domain [{clip}, {1.0 - clip}]")
        self.flow = flow
        self.sigma = float(sigma)
        self.name = name
        self._quadrature = quadrature
        self._clip = clip
        self._nodes, self._slopes, self._levels = self._build_grid()

    @property
    def domain(self) -> tuple[float, float]:
        return (self._clip, 1.0 - self._clip)

    def _density(self, y: float) -> float:
        flow_value = float(self.flow(y))
        if not flow_value > 0.0:
            raise DomainError(f"Flow cost must be strictly positive, got c({y:.6g}) = {flow_value}")
        return self.sigma**2 * flow_value / (2.0 * (y * (1.0 - y)) ** 2)

    def _integrate(self, integrand: Callable[[float], float], lower: float, upper: float) -> float:
        if lower == upper:
            return 0.0
        settings = self._quadrature
        result = quad(
            integrand,
            lower,
            upper,
            epsabs=settings.epsabs,
            epsrel=settings.epsrel,
            limit=settings.limit,
            full_output=1,
        )
        value, abserr = float(result[0]), float(result[1])
        if len(result) > 3 and abserr > 1e3 * max(settings.epsabs, settings.epsrel * abs(value)):
            raise NumericError(f"Quadrature on [{lower:.6g}, {upper:.6g}] did not converge: {result[3]}", abserr)
        return value

    def _build_grid(self) -> tuple[NDArray[np.float64], NDArray[np.float64], NDArray[np.float64]]:
        lower, upper = self.domain
        nodes = expit(np.linspace(logit(lower), logit(upper), self._quadrature.nodes))
        nodes = np.unique(np.concatenate([nodes, [self.prior]]))
        anchor = int(np.searchsorted(nodes, self.prior))
        slopes = np.zeros_like(nodes)
        levels = np.zeros_like(nodes)

        for k in range(anchor + 1, nodes.size):
            left, right = nodes[k - 1], nodes[k]
            slopes[k] = slopes[k - 1] + self._integrate(self._density, left, right)
            levels[k] = (
                levels[k - 1]
                + slopes[k - 1] * (right - left)
                + self._integrate(lambda y, r=right: (r - y) * self._density(y), left, right)
            )
        for k in range(anchor - 1, -1, -1):
            left, right = nodes[k], nodes[k + 1]
            slopes[k] = slopes[k + 1] - self._integrate(self._density, left, right)
            levels[k] = (
                levels[k + 1]
                + slopes[k + 1] * (left - right)
                + self._integrate(lambda y, lo=left: (y - lo) * self._density(y), left, right)
            )
        return nodes, slopes, levels

    def _nearest_node(self, x: float) -> int:
        lower, upper = self.domain
        if x < lower:
            raise DivergenceError("Flow cost evaluated below the quadrature domain", 0.0, "+inf")
        if x > upper:
            raise DivergenceError("Flow cost evaluated above the quadrature domain", 1.0, "+inf")
        return int(np.argmin(np.abs(self._nodes - x)))

    def _phi_scalar(self, x: float) -> float:
        k = self._nearest_node(x)
        node = self._nodes[k]
        return float(
            self._levels[k]
            + self._slopes[k] * (x - node)
            + self._integrate(lambda y: (x - y) * self._density(y), node, x)
        )

    def _phi_prime_scalar(self, x: float) -> float:
        k = self._nearest_node(x)
        return float(self._slopes[k] + self._integrate(self._density, self._nodes[k], x))

    def phi(self, x: FloatOrArray) -> FloatOrArray:
        if isinstance(x, np.ndarray):
            return np.array([self._phi_scalar(float(value)) for value in x.ravel()]).reshape(x.shape)
        return self._phi_scalar(float(x))

    def phi_prime(self, x: FloatOrArray) -> FloatOrArray:
        if isinstance(x, np.ndarray):
            return np.array([self._phi_prime_scalar(float(value)) for value in x.ravel()]).reshape(x.shape)
        return self._phi_prime_scalar(float(x))

    def phi_double_prime(self, x: FloatOrArray) -> FloatOrArray:
        self._reject_endpoints(x, "phi''", "+inf", "+inf")
        if isinstance(x, np.ndarray):
            return np.array([self._density(float(value)) for value in x.ravel()]).reshape(x.shape)
        return self._density(float(x))

    def reanchored(self, prior: float) -> "FlowCost":
        return FlowCost(self.flow, self.sigma, prior, self._quadrature, self.name)
