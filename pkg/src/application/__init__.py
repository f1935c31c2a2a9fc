"""
application module
Domain module: defines the core behaviour of the biased evidence acquisition model.

This includes:
- the numeric settings loaded from config.yaml (SETTINGS), imported first.
- belief arithmetic under heterogeneous priors (e.g. reprior).
- the static persuasion solver and its concavification oracle (e.g. solve_static).
- the comparative statics of belief and preference bias (e.g. sweep_bias, preference_statics).
- the sequential sampling simulator (e.g. validate_equivalence).
- the scenario runner, figure data and verification suites behind the controllers.
"""

from .settings import SETTINGS
from .belief_geometry import (
    effective_threshold_biased_DM,
    effective_threshold_biased_L,
    odds,
    reprior,
    threshold_biased_DM_derivative,
)
from .cost_factory import build_cost
from .persuasion_solver import (
    concavify_oracle,
    foc_residual_h,
    lower_limit,
    sample_value_function,
    solution_value,
    solve_by_oracle,
    solve_foc_root,
    solve_static,
    solve_variance_closed_form,
)
from .bias_analysis import (
    abar,
    biased_lambda,
    biased_outcome,
    biased_problem,
    dbar,
    implicit_low_posterior_claims,
    lemma1_classify,
    lemma1_t,
    min_reward_ratio,
    outcome_probs,
    prop3_quartic,
    prop3_threshold,
    sweep_bias,
    theorem1_classify,
    theorem1_f,
    theorem2_compare,
    theorem2_q,
    threshold_bundle,
    v_epsilon,
    variance_lambda_biased_L,
)
from .preference_bias import (
    analytic_lambda_slopes,
    check_assumption1,
    preference_problem,
    preference_statics,
    preference_value,
    residual_partials,
    solve_preference,
)
from .wald_simulator import (
    boundaries_for,
    filter_belief,
    path_generator,
    predicted_hit_probability,
    run_paths,
    sim_config_for,
    simulate_paths,
    summarize,
    validate_equivalence,
)
from .figure_data import figure_for, figure_series
from .scenario_runner import simulate_scenario, solve_scenario, sweep_scenario
from .verification_suites import SUITES, run_suite

__all__ = [
    "SETTINGS",
    "SUITES",
    "abar",
    "analytic_lambda_slopes",
    "biased_lambda",
    "biased_outcome",
    "biased_problem",
    "boundaries_for",
    "build_cost",
    "check_assumption1",
    "concavify_oracle",
    "dbar",
    "effective_threshold_biased_DM",
    "effective_threshold_biased_L",
    "figure_for",
    "figure_series",
    "filter_belief",
    "foc_residual_h",
    "implicit_low_posterior_claims",
    "lemma1_classify",
    "lemma1_t",
    "lower_limit",
    "min_reward_ratio",
    "odds",
    "outcome_probs",
    "path_generator",
    "predicted_hit_probability",
    "preference_problem",
    "preference_statics",
    "preference_value",
    "prop3_quartic",
    "prop3_threshold",
    "reprior",
    "residual_partials",
    "run_paths",
    "run_suite",
    "sample_value_function",
    "sim_config_for",
    "simulate_paths",
    "simulate_scenario",
    "solution_value",
    "solve_by_oracle",
    "solve_foc_root",
    "solve_preference",
    "solve_scenario",
    "solve_static",
    "solve_variance_closed_form",
    "summarize",
    "sweep_bias",
    "sweep_scenario",
    "theorem1_classify",
    "theorem1_f",
    "theorem2_compare",
    "theorem2_q",
    "threshold_biased_DM_derivative",
    "threshold_bundle",
    "v_epsilon",
    "validate_equivalence",
    "variance_lambda_biased_L",
]
