"""
scenario_schemas.py

Scenario file schema: the exogenous environment (true prior, conviction threshold,
reward, noise, cost) plus who is biased and, optionally, a simulation block.

Unknown keys are rejected. On load the model conditions are re-checked, with
messages naming the violated condition.
"""

import math
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, PositiveInt, model_validator
from typing_extensions import Self

from .belief_schemas import InteriorBelief, Reward, ThresholdBelief
from .cost_schemas import CostSpec, VarianceSpec
from .preference_schemas import PreferenceParams


class BiasBlock(BaseModel):
    """who = "L" biases the investigator, "DM" the decision-maker; mu_B defaults to no bias."""
    model_config = ConfigDict(extra="forbid", frozen=True)

    who: Literal["L", "DM", "preference"]
    mu_B: Optional[InteriorBelief] = None
    eta: Optional[float] = Field(default=None, ge=0.0, le=1.0)
    rho: Optional[float] = Field(default=None, ge=0.0, allow_inf_nan=False)

    @model_validator(mode="after")
    def _fields_match_kind(self) -> Self:
        if self.who == "preference":
            if self.eta is None or self.rho is None:
                raise ValueError("Preference bias needs both eta and rho")
            if self.mu_B is not None:
                raise ValueError("Preference bias does not take mu_B; belief and preference bias are not mixed")
        elif self.eta is not None or self.rho is not None:
            raise ValueError(f"Belief bias (who={self.who}) does not take eta or rho")
        return self


class SimBlock(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    dt: Optional[PositiveFloat] = None
    n_paths: Optional[PositiveInt] = None
    seed: int = Field(default=0, ge=0, lt=2**64)
    theta_mode: Literal["guilty", "innocent", "prior"] = "prior"
    bridge_correction: bool = True
    max_steps: Optional[PositiveInt] = None
    true_cost: bool = False


class ScenarioFile(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    mu: InteriorBelief
    a: ThresholdBelief
    v: Reward
    sigma: PositiveFloat = Field(allow_inf_nan=False)
    cost: CostSpec
    bias: BiasBlock = BiasBlock(who="L")
    sim: Optional[SimBlock] = None

    @property
    def mu_B(self) -> float:
        return self.bias.mu_B if self.bias.mu_B is not None else self.mu

    @model_validator(mode="after")
    def _model_conditions(self) -> Self:
        if not self.mu < self.a:
            raise ValueError(f"Threshold must exceed the true prior: mu={self.mu}, a={self.a}")
        if self.bias.who in ("L", "DM") and self.mu_B < self.mu:
            raise ValueError(f"Bias direction violated: mu_B={self.mu_B} is below mu={self.mu}")
        if self.bias.who == "preference":
            PreferenceParams(eta=self.bias.eta, rho=self.bias.rho, v=self.v, a=self.a)
        if isinstance(self.cost, VarianceSpec) and self.bias.who in ("L", "DM") and self.bias.mu_B is not None:
            self._check_condition_1(self.cost)
        return self

    def _check_condition_1(self, cost: VarianceSpec) -> None:
        from src.application.belief_geometry import effective_threshold_biased_DM

        d = math.sqrt(self.v / cost.kappa)
        a_dm = self.a
        if self.bias.who == "DM":
            a_dm = effective_threshold_biased_DM(self.mu, self.mu_B, self.a)
            if a_dm <= self.mu:
                return
        if a_dm <= d:
            raise ValueError(f"Condition 1 violated: a_DM <= d (a_DM={a_dm:.6g}, d={d:.6g})")

    @classmethod
    def from_path(cls, path: str | Path) -> "ScenarioFile":
        """Read and validate a scenario file. Malformed JSON surfaces as a ValidationError."""
        return cls.model_validate_json(Path(path).read_text(encoding="utf-8"))
