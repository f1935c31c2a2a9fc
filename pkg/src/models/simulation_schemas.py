"""
simulation_schemas.py

Configuration and results of the Monte Carlo sampling simulator.

Includes:
- SimConfig: noise, step, paths, seed, state-of-the-world mode, stopping boundaries, flow cost.
- ThetaBreakdown, SimulationStats: aggregated hitting frequencies, costs and stopping times.
- PathTable: per-path arrays in path-index order.
- EquivalenceReport: static prediction against simulated statistics.
"""

from collections.abc import Callable
from typing import Any, Literal, NamedTuple, Optional

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, PositiveInt, model_validator
from typing_extensions import Self

from .analysis_schemas import Verdict
from .belief_schemas import Belief, InteriorBelief

ThetaMode = Literal["guilty", "innocent", "prior"]


class SimConfig(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    sigma: PositiveFloat
    dt: PositiveFloat
    n_paths: PositiveInt
    seed: int = Field(ge=0, lt=2**64)
    theta_mode: ThetaMode = "prior"
    theta_prior: Optional[Belief] = None
    boundaries: tuple[Belief, Belief]
    prior_subjective: Belief
    flow_cost: Callable[[Any], Any] = Field(exclude=True)
    true_prior: Optional[InteriorBelief] = None
    bridge_correction: bool = True
    max_steps: PositiveInt = 10_000_000
    block_size: PositiveInt = 1024
    chunk_steps: PositiveInt = 512
    resolution_guard: PositiveFloat = 1e-3

    @model_validator(mode="after")
    def _check_geometry(self) -> Self:
        low, high = self.boundaries
        if not low < high:
            raise ValueError(f"Boundaries must satisfy low < high, got {self.boundaries}")
        if not low <= self.prior_subjective <= high:
            raise ValueError(f"Subjective prior {self.prior_subjective} lies outside boundaries {self.boundaries}")
        if self.dt > self.resolution_guard * self.sigma**2:
            raise ValueError(f"dt={self.dt} exceeds the resolution guard {self.resolution_guard} * sigma^2")
        if self.theta_mode == "prior" and self.theta_prior is None:
            raise ValueError("theta_mode 'prior' needs theta_prior")
        return self


class ThetaBreakdown(BaseModel):
    model_config = ConfigDict(frozen=True)

    n_paths: int
    hit_high_freq: float
    hit_high_radius: float
    mean_flow_cost: float
    mean_stop_time: float


class SimulationStats(BaseModel):
    """Radii are one binomial standard deviation; cost and belief radii are standard errors."""
    model_config = ConfigDict(frozen=True)

    n_paths: int
    truncated: int
    hit_high_freq: float
    hit_high_radius: float
    hit_low_freq: float
    mean_flow_cost: float
    flow_cost_se: float
    mean_stop_time: float
    stopped_belief_mean: float
    stopped_belief_se: float
    per_theta: dict[str, ThetaBreakdown]
    mean_true_cost: Optional[float] = None
    true_cost_se: Optional[float] = None


class PathTable(NamedTuple):
    path: NDArray[np.int64]
    theta: NDArray[np.int8]
    hit_high: NDArray[np.bool_]
    stop_time: NDArray[np.float64]
    cost: NDArray[np.float64]
    true_cost: NDArray[np.float64]
    truncated: NDArray[np.bool_]


class EquivalenceReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    static_cost: float
    predicted_conviction_prob: float
    stats: SimulationStats
    checks: list[Verdict]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)
