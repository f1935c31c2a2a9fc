"""
report_schemas.py

Reports produced for a whole scenario file.
"""

from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict

from .analysis_schemas import OutcomeProbs
from .preference_schemas import Assumption1Report
from .simulation_schemas import EquivalenceReport
from .solver_schemas import StaticSolution


class ScenarioReport(BaseModel):
    """Static solution of the evidence gatherer; `assumption` and `binding` only for preference bias."""
    model_config = ConfigDict(frozen=True)

    who: Literal["L", "DM", "preference"]
    mu_B: float
    prior_subjective: float
    threshold_effective: float
    solution: StaticSolution
    outcome: OutcomeProbs
    assumption: Optional[Assumption1Report] = None
    binding: Optional[bool] = None


class SimulationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    config: dict[str, Any]
    scenario: ScenarioReport
    equivalence: EquivalenceReport
    passed: bool
