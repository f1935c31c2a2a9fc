"""
analysis_schemas.py

Outcome statistics, threshold constants, theorem verdicts and sweep rows.

Includes:
- OutcomeProbs: conviction rates conditional on guilt and innocence, plus unconditional ones.
- ThresholdBundle: every threshold constant of the variance-cost analysis.
- Lemma1Verdict, Theorem1Verdict: classifications with their critical priors.
- SweepRow: one row of a bias sweep table.
- Prop3Result, Theorem2Result: comparisons of a biased investigator with a biased decision-maker.
- Verdict: one checked claim of a verification suite.
"""

from enum import Enum
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from .solver_schemas import Regime


class OutcomeProbs(BaseModel):
    """gamma: convict | guilty. lambda: convict | innocent."""
    model_config = ConfigDict(frozen=True, serialize_by_alias=True)

    gamma: float = Field(ge=0.0, le=1.0)
    lambda_: float = Field(ge=0.0, le=1.0, serialization_alias="lambda")
    p_true: float = Field(ge=0.0, le=1.0)
    p_subjective: float = Field(ge=0.0, le=1.0)


class ThresholdBundle(BaseModel):
    model_config = ConfigDict(frozen=True)

    ubar_d: float
    dbar: float
    abar: float
    mu_L_dagger: Optional[float] = None
    v_epsilon: float
    mu_B_diamond: Optional[float] = None


class Lemma1Class(str, Enum):
    INCREASING_NEAR_PRIOR = "IncreasingNearPrior"
    ALWAYS_DECREASING = "AlwaysDecreasing"


class Lemma1Verdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    classification: Lemma1Class
    mu_L_dagger: Optional[float] = None


class Theorem1Class(str, Enum):
    BIAS_BENEFICIAL_NEAR_PRIOR = "BiasBeneficialNearPrior"
    BIAS_HARMFUL = "BiasHarmful"
    NO_INVESTIGATION_BASELINE = "NoInvestigationBaseline"


class Theorem1Verdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    classification: Theorem1Class
    lambda_minimizer: Optional[float] = None


class SweepRow(BaseModel):
    model_config = ConfigDict(frozen=True, serialize_by_alias=True)

    mu_B: float
    who: Literal["L", "DM"]
    regime: Regime
    b: float
    high: float
    p_subjective: float
    gamma: float
    lambda_: float = Field(serialization_alias="lambda")
    p_true: float


class Prop3Result(BaseModel):
    model_config = ConfigDict(frozen=True)

    abar: float
    dbar: float
    applicable: bool
    mu_B_diamond: Optional[float] = None
    sign_changes: int = 0
    investigator_bias_weakly_preferred: bool = False
    quartic_agrees: Optional[bool] = None


class Theorem2Result(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: str
    mu: float
    a: float
    v_epsilon: float
    v: float
    lambda_slope_L: float
    lambda_slope_DM: float
    q_value: float
    one_minus_q: float
    slopes_match_q: bool
    largest_checked_reward: Optional[float] = None


class Verdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    claim: str
    parameters: dict[str, float | str]
    expected: str
    observed: float | str | bool | None
    passed: bool
