"""
settings_schemas.py

Typed view of src/application/config.yaml. Every numeric default of the
package lives in that file and is validated against these models on load.
"""

from pydantic import BaseModel, ConfigDict, PositiveFloat, PositiveInt


class _Frozen(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class Tolerances(_Frozen):
    belief_equality: PositiveFloat
    bayes_plausibility: PositiveFloat
    weight_normalization: PositiveFloat
    value_dominance: PositiveFloat


class SolverSettings(_Frozen):
    xtol: PositiveFloat
    max_iterations: PositiveInt
    divergent_floor: PositiveFloat
    uniqueness_samples: PositiveInt


class OracleSettings(_Frozen):
    grid_step: PositiveFloat
    divergent_clip: PositiveFloat


class QuadratureSettings(_Frozen):
    epsabs: PositiveFloat
    epsrel: PositiveFloat
    limit: PositiveInt
    clip: PositiveFloat
    nodes: PositiveInt


class FiniteDifferenceSettings(_Frozen):
    step: PositiveFloat
    richardson_step: PositiveFloat
    disagreement: PositiveFloat
    statics_step: PositiveFloat
    statics_shrink: PositiveFloat
    statics_max_shrinks: int


class AnalysisSettings(_Frozen):
    prop3_scan_points: PositiveInt
    prop3_xtol: PositiveFloat
    boundary_xtol: PositiveFloat
    boundary_offset: PositiveFloat
    theorem2_reward_factor: PositiveFloat
    theorem2_scan_factors: tuple[PositiveFloat, ...]


class SimulationSettings(_Frozen):
    block_size: PositiveInt
    chunk_steps: PositiveInt
    max_steps: PositiveInt
    truncation_limit: PositiveFloat
    dt_factor: PositiveFloat
    resolution_guard: PositiveFloat
    quick_paths: PositiveInt
    full_paths: PositiveInt
    cost_relative_tolerance: PositiveFloat
    sigma_bound: PositiveFloat


class FigureCase(_Frozen):
    mu: float
    mu_L: float
    a: float
    kappa: PositiveFloat
    v: PositiveFloat


class FigureSettings(_Frozen):
    grid_step: PositiveFloat
    cases: dict[str, FigureCase]


class RunningExample(_Frozen):
    mu: float
    mu_L: float
    a: float
    kappa: PositiveFloat
    v: PositiveFloat


class ThresholdPoint(_Frozen):
    mu: float
    a: float
    d: PositiveFloat


class Theorem2Point(_Frozen):
    mu: float
    epsilon: PositiveFloat


class PreferencePoint(_Frozen):
    mu: float
    a: float
    kappa: PositiveFloat
    v: PositiveFloat
    eta: float
    rho: float
    lowered_a: float


class PreferenceGrid(_Frozen):
    eta: tuple[float, ...]
    rho: tuple[float, ...]
    v: tuple[PositiveFloat, ...]


class VerificationSettings(_Frozen):
    running_example: RunningExample
    theorem1_harmful: ThresholdPoint
    prop3_window: ThresholdPoint
    theorem2: Theorem2Point
    preference: PreferencePoint
    preference_grid: PreferenceGrid
    sweep_step: PositiveFloat
    prop1_step: PositiveFloat
    grid_size: PositiveInt


class Settings(_Frozen):
    tolerances: Tolerances
    solver: SolverSettings
    oracle: OracleSettings
    quadrature: QuadratureSettings
    finite_differences: FiniteDifferenceSettings
    analysis: AnalysisSettings
    simulation: SimulationSettings
    figure: FigureSettings
    verification: VerificationSettings


