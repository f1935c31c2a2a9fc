"""
preference_schemas.py

Parameters and reports of the preference-based bias model.
"""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing_extensions import Self

from .analysis_schemas import OutcomeProbs
from .belief_schemas import Reward, ThresholdBelief
from .solver_schemas import PreferenceShaped, StaticSolution

SLOPE_ZERO = 1e-9


def _sign(slope: float) -> int:
    if abs(slope) <= SLOPE_ZERO:
        return 0
    return 1 if slope > 0.0 else -1


class PreferenceParams(BaseModel):
    """
    eta weighs correct decisions against the reward v; rho is the loss from convicting
    an innocent defendant relative to acquitting a guilty one. With eta > 0 the
    decision-maker's threshold must be at least the investigator's preferred one,
    (rho eta - (1 - eta) v) / (eta (1 + rho)); eta = 0 leaves it unconstrained.
    """
    model_config = ConfigDict(frozen=True)

    eta: float = Field(ge=0.0, le=1.0)
    rho: float = Field(ge=0.0, allow_inf_nan=False)
    v: Reward
    a: ThresholdBelief

    @model_validator(mode="after")
    def _threshold_above_investigator_cutoff(self) -> Self:
        if self.eta > 0.0:
            cutoff = (self.rho * self.eta - (1.0 - self.eta) * self.v) / (self.eta * (1.0 + self.rho))
            if self.a < cutoff:
                raise ValueError(
                    f"Threshold constraint violated: a={self.a} is below the investigator's cutoff {cutoff:.6g}"
                )
        return self

    @property
    def shape(self) -> PreferenceShaped:
        return PreferenceShaped(eta=self.eta, rho=self.rho, v=self.v)


class Assumption1Report(BaseModel):
    model_config = ConfigDict(frozen=True)

    b_positive: bool
    prior_inside: bool
    slope_condition: bool
    slope_lhs: float
    slope_rhs: float

    @property
    def holds(self) -> bool:
        return self.b_positive and self.prior_inside and self.slope_condition

    @property
    def failed_clauses(self) -> list[str]:
        clauses = {
            "b > 0": self.b_positive,
            "mu in (b, a)": self.prior_inside,
            "-eta - phi'(b) >= eta rho - phi'(a)": self.slope_condition,
        }
        return [name for name, ok in clauses.items() if not ok]


class PreferenceSolution(BaseModel):
    model_config = ConfigDict(frozen=True)

    solution: StaticSolution
    assumption: Assumption1Report
    binding: bool
    outcome: OutcomeProbs


class StaticsEntry(BaseModel):
    """
    A weak claim only bounds the slope, so a zero slope satisfies it as well.
    """
    model_config = ConfigDict(frozen=True)

    parameter: Literal["a", "v", "rho", "eta"]
    numeric_slope: float
    analytic_slope: float
    expected_sign: int
    step: float
    weak: bool = False

    @property
    def agrees(self) -> bool:
        numeric, analytic = _sign(self.numeric_slope), _sign(self.analytic_slope)
        if self.expected_sign == 0:
            return numeric == analytic
        allowed = {self.expected_sign, 0} if self.weak else {self.expected_sign}
        if numeric not in allowed or analytic not in allowed:
            return False
        return numeric == analytic or self.weak


class StaticsReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    eta: float
    rho: float
    v: float
    a: float
    entries: list[StaticsEntry]
    residual_partials: dict[str, float]
    bias_raises_lambda: bool

    @property
    def passed(self) -> bool:
        return self.bias_raises_lambda and all(entry.agrees for entry in self.entries)
