"""
solver_schemas.py

Records exchanged with the static persuasion solver.

Includes:
- Regime: Interior / NoAcquisition / FreeConviction tag of a solution.
- FlatReward, PreferenceShaped: payoff of the evidence gatherer at a posterior.
- StaticProblem: effective prior, effective threshold, reward, cost and payoff shape.
- StaticSolution: optimal binary distribution over posteriors.
- OracleResult: output of the concavification oracle.
"""

from enum import Enum
from typing import Annotated, Any, Literal, NamedTuple, Optional, Union

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from src.abstractions import CostFunctionInterface
from .belief_schemas import Belief, InteriorBelief, Reward, ThresholdBelief


class Regime(str, Enum):
    INTERIOR = "interior"
    NO_ACQUISITION = "no_acquisition"
    FREE_CONVICTION = "free_conviction"


class FlatReward(BaseModel):
    """Reward v on conviction, nothing otherwise."""
    model_config = ConfigDict(frozen=True)

    kind: Literal["flat"] = "flat"
    v: Reward

    def effective_reward(self, threshold: float) -> float:
        return self.v

    def payoff(self, x: NDArray[np.float64], threshold: float) -> NDArray[np.float64]:
        return np.where(x >= threshold, self.v, 0.0)


class PreferenceShaped(BaseModel):
    """
    Payoff of a sender who weighs the reward against the decision's correctness.

    Below the threshold the defendant is acquitted and the sender loses eta times
    the probability of guilt; at or above it the defendant is convicted, the sender
    receives (1 - eta) v and loses eta rho times the probability of innocence.
    """
    model_config = ConfigDict(frozen=True)

    kind: Literal["preference"] = "preference"
    eta: float = Field(ge=0.0, le=1.0)
    rho: float = Field(ge=0.0, allow_inf_nan=False)
    v: Reward

    def effective_reward(self, threshold: float) -> float:
        """Constant that turns the binding first order condition into the flat-reward one."""
        return (1.0 - self.eta) * self.v + self.eta * (threshold - self.rho * (1.0 - threshold))

    def payoff(self, x: NDArray[np.float64], threshold: float) -> NDArray[np.float64]:
        convicted = -self.eta * self.rho * (1.0 - x) + (1.0 - self.eta) * self.v
        acquitted = -self.eta * x
        return np.where(x >= threshold, convicted, acquitted)


UpperPayoffShape = Annotated[Union[FlatReward, PreferenceShaped], Field(discriminator="kind")]


class StaticProblem(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    prior_effective: InteriorBelief
    threshold_effective: ThresholdBelief
    reward: Reward
    cost: CostFunctionInterface
    upper_payoff_shape: Optional[UpperPayoffShape] = None

    @model_validator(mode="before")
    @classmethod
    def _default_shape(cls, data: Any) -> Any:
        if isinstance(data, dict) and data.get("upper_payoff_shape") is None and "reward" in data:
            return {**data, "upper_payoff_shape": FlatReward(v=data["reward"])}
        return data

    @property
    def shape(self) -> FlatReward | PreferenceShaped:
        assert self.upper_payoff_shape is not None
        return self.upper_payoff_shape

    def value(self, x: float | NDArray[np.float64]) -> NDArray[np.float64]:
        """Perceived value V(x) = payoff(x) - phi(x)."""
        xs = np.asarray(x, dtype=float)
        return self.shape.payoff(xs, self.threshold_effective) - np.asarray(self.cost.phi(xs), dtype=float)


class StaticSolution(BaseModel):
    model_config = ConfigDict(frozen=True)

    regime: Regime
    prior: Belief
    low_posterior: Belief
    high_posterior: Belief
    conviction_prob: Belief
    at_lower_corner: bool = False
    experimental: bool = False

    @computed_field  # type: ignore[prop-decorator]
    @property
    def support_weights(self) -> tuple[float, float]:
        return (1.0 - self.conviction_prob, self.conviction_prob)

    @property
    def support(self) -> tuple[float, float]:
        return (self.low_posterior, self.high_posterior)


class OracleResult(NamedTuple):
    envelope_x: NDArray[np.float64]
    envelope_y: NDArray[np.float64]
    low: float
    high: float
    weight_high: float
    value: float
