from .analysis_schemas import (
    Lemma1Class,
    Lemma1Verdict,
    OutcomeProbs,
    Prop3Result,
    SweepRow,
    Theorem1Class,
    Theorem1Verdict,
    Theorem2Result,
    ThresholdBundle,
    Verdict,
)
from .belief_schemas import Belief, InteriorBelief, Reward, ThresholdBelief
from .cost_schemas import CostSpec, EntropySpec, FlowSpec, LogLikelihoodSpec, TsallisSpec, VarianceSpec
from .figure_schemas import FigureData, FigureMetadata, FigurePoint, FigureSeries
from .preference_schemas import (
    Assumption1Report,
    PreferenceParams,
    PreferenceSolution,
    StaticsEntry,
    StaticsReport,
)
from .report_schemas import ScenarioReport, SimulationReport
from .request_schemas import (
    CommandRequest,
    FigureRequest,
    SimulateRequest,
    SolveRequest,
    SweepRequest,
    VerifyRequest,
)
from .response_schemas import APIInfoResponse, FastApiPostResponse
from .scenario_schemas import BiasBlock, ScenarioFile, SimBlock
from .settings_schemas import QuadratureSettings, Settings
from .simulation_schemas import (
    EquivalenceReport,
    PathTable,
    SimConfig,
    SimulationStats,
    ThetaBreakdown,
    ThetaMode,
)
from .solver_schemas import (
    FlatReward,
    OracleResult,
    PreferenceShaped,
    Regime,
    StaticProblem,
    StaticSolution,
    UpperPayoffShape,
)
from .specs_schemas import CliArgument, EndpointSpec

__all__ = [
    "APIInfoResponse",
    "Assumption1Report",
    "Belief",
    "BiasBlock",
    "CliArgument",
    "CommandRequest",
    "CostSpec",
    "EndpointSpec",
    "EntropySpec",
    "EquivalenceReport",
    "FastApiPostResponse",
    "FigureData",
    "FigureMetadata",
    "FigurePoint",
    "FigureRequest",
    "FigureSeries",
    "FlatReward",
    "FlowSpec",
    "InteriorBelief",
    "Lemma1Class",
    "Lemma1Verdict",
    "LogLikelihoodSpec",
    "OracleResult",
    "OutcomeProbs",
    "PathTable",
    "PreferenceParams",
    "PreferenceShaped",
    "PreferenceSolution",
    "Prop3Result",
    "QuadratureSettings",
    "Regime",
    "Reward",
    "ScenarioFile",
    "ScenarioReport",
    "Settings",
    "SimBlock",
    "SimConfig",
    "SimulateRequest",
    "SimulationReport",
    "SimulationStats",
    "SolveRequest",
    "StaticProblem",
    "StaticSolution",
    "StaticsEntry",
    "StaticsReport",
    "SweepRequest",
    "SweepRow",
    "Theorem1Class",
    "Theorem1Verdict",
    "Theorem2Result",
    "ThetaBreakdown",
    "ThetaMode",
    "ThresholdBelief",
    "ThresholdBundle",
    "TsallisSpec",
    "UpperPayoffShape",
    "VarianceSpec",
    "Verdict",
    "VerifyRequest",
]
