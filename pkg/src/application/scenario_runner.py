"""
scenario_runner.py

Runs a scenario file end to end: picks the evidence gatherer's static problem
from the bias block, solves it, and optionally simulates the solution.
"""

from typing import Any

from src.abstractions import DomainError
from src.application.bias_analysis import biased_problem, outcome_probs, sweep_bias
from src.application.cost_factory import build_cost
from src.application.persuasion_solver import solve_static
from src.application.preference_bias import solve_preference
from src.application.settings import SETTINGS
from src.application.wald_simulator import sim_config_for, simulate_paths, validate_equivalence
from src.models import (
    PreferenceParams,
    ScenarioFile,
    ScenarioReport,
    SimBlock,
    SimulationReport,
    SweepRow,
)
from src.utils import get_logger, parse_grid

logger = get_logger("scenario.log")


def solve_scenario(scenario: ScenarioFile) -> ScenarioReport:
    who = scenario.bias.who
    if who == "preference":
        assert scenario.bias.eta is not None and scenario.bias.rho is not None
        params = PreferenceParams(eta=scenario.bias.eta, rho=scenario.bias.rho, v=scenario.v, a=scenario.a)
        result = solve_preference(params, scenario.mu, build_cost(scenario.cost, scenario.mu, scenario.sigma))
        return ScenarioReport(
            who=who,
            mu_B=scenario.mu,
            prior_subjective=scenario.mu,
            threshold_effective=scenario.a,
            solution=result.solution,
            outcome=result.outcome,
            assumption=result.assumption,
            binding=result.binding,
        )

    subjective = scenario.mu_B if who == "L" else scenario.mu
    cost = build_cost(scenario.cost, subjective, scenario.sigma)
    problem, _ = biased_problem(who, scenario.mu, scenario.mu_B, scenario.a, scenario.v, cost)
    solution = solve_static(problem)
    logger.info(f"Solved who={who}, mu_B={scenario.mu_B}: regime={solution.regime.value}")
    return ScenarioReport(
        who=who,
        mu_B=scenario.mu_B,
        prior_subjective=subjective,
        threshold_effective=problem.threshold_effective,
        solution=solution,
        outcome=outcome_probs(solution, scenario.mu, subjective, problem.threshold_effective),
    )


def sweep_scenario(scenario: ScenarioFile, grid: str, who: str | None = None, include_boundaries: bool = False) -> list[SweepRow]:
    """Sweep the belief bias of `who` (default: the scenario's) over a start:stop:step grid."""
    target = who or scenario.bias.who
    if target not in ("L", "DM"):
        raise DomainError("Sweeps vary a belief bias; choose who=L or who=DM")
    return sweep_bias(scenario, target, parse_grid(grid).tolist(), include_boundaries, show_progress=True)  # type: ignore[arg-type]


def simulate_scenario(
    scenario: ScenarioFile, quick: bool = False, record_paths: bool = False
) -> tuple[SimulationReport, list[dict[str, Any]]]:
    """
    Simulate the scenario's static solution with the settings of its `sim` block and
    compare against the static predictions. Per-path rows are returned when requested.
    """
    block = scenario.sim or SimBlock()
    report = solve_scenario(scenario)
    cost = build_cost(scenario.cost, report.prior_subjective, scenario.sigma)
    settings = SETTINGS.simulation
    n_paths = block.n_paths or (settings.quick_paths if quick else settings.full_paths)
    track_true = block.true_cost and report.prior_subjective != scenario.mu
    config = sim_config_for(
        report.solution,
        cost,
        sigma=scenario.sigma,
        n_paths=n_paths,
        seed=block.seed,
        dt=block.dt,
        theta_mode=block.theta_mode,
        true_prior=scenario.mu if track_true else None,
        bridge_correction=block.bridge_correction,
        max_steps=block.max_steps,
    )
    table = simulate_paths(config, show_progress=True)
    equivalence = validate_equivalence(report.solution, cost, config, table=table)
    simulation = SimulationReport(
        config=config.model_dump(mode="json"),
        scenario=report,
        equivalence=equivalence,
        passed=equivalence.passed,
    )
    if not record_paths:
        return simulation, []
    rows = [
        {
            "path": int(path),
            "theta": int(theta),
            "hit_high": bool(hit),
            "stop_time": float(stop_time),
            "cost": float(path_cost),
            "truncated": bool(truncated),
        }
        for path, theta, hit, stop_time, path_cost, truncated in zip(
            table.path, table.theta, table.hit_high, table.stop_time, table.cost, table.truncated
        )
    ]
    return simulation, rows
