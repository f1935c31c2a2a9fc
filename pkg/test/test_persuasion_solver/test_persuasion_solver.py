import numpy as np
import pytest

from src.abstractions import DomainError
from src.application.persuasion_solver import (
    concavify_oracle,
    foc_residual_h,
    sample_value_function,
    solution_value,
    solve_by_oracle,
    solve_foc_root,
    solve_static,
    solve_variance_closed_form,
)
from src.costs import EntropyCost, LogLikelihoodCost, TsallisCost, VarianceCost
from src.models import PreferenceShaped, Regime, StaticProblem


def test_running_example_solution(running_problem):
    solution = solve_static(running_problem)
    assert solution.regime is Regime.INTERIOR
    assert solution.low_posterior == pytest.approx(0.22, abs=1e-9)
    assert solution.high_posterior == pytest.approx(0.72, abs=1e-12)
    assert solution.conviction_prob == pytest.approx(0.16, abs=1e-9)
    assert not solution.at_lower_corner


def test_residual_vanishes_at_the_low_posterior(running_problem):
    assert foc_residual_h(0.22, running_problem) == pytest.approx(0.0, abs=1e-12)
    assert foc_residual_h(0.1, running_problem) < 0.0 < foc_residual_h(0.3, running_problem)


def test_solve_foc_root(running_problem):
    assert solve_foc_root(running_problem) == pytest.approx(0.22, abs=1e-10)


def test_variance_closed_form_matches_solver(running_problem):
    closed = solve_variance_closed_form(0.3, running_problem.threshold_effective, 0.5)
    solved = solve_static(running_problem)
    assert closed.regime is Regime.INTERIOR
    assert closed.low_posterior == pytest.approx(solved.low_posterior, abs=1e-9)
    assert closed.conviction_prob == pytest.approx(solved.conviction_prob, abs=1e-9)


def test_variance_closed_form_regimes():
    assert solve_variance_closed_form(0.2, 0.8, 0.5).regime is Regime.NO_ACQUISITION
    assert solve_variance_closed_form(0.8, 0.8, 0.5).regime is Regime.FREE_CONVICTION


def test_variance_closed_form_condition_1():
    with pytest.raises(DomainError, match="Condition 1 violated"):
        solve_variance_closed_form(0.3, 0.45, 0.5)


def test_bayes_plausibility(entropy_problem):
    solution = solve_static(entropy_problem)
    assert solution.regime is Regime.INTERIOR
    mean = np.dot(solution.support_weights, solution.support)
    assert mean == pytest.approx(0.3, abs=1e-10)
    assert 0.0 < solution.low_posterior < 0.3
    assert foc_residual_h(solution.low_posterior, entropy_problem) == pytest.approx(0.0, abs=1e-8)


def test_free_conviction():
    problem = StaticProblem(prior_effective=0.6, threshold_effective=0.6, reward=1.0, cost=VarianceCost(4.0, 0.6))
    solution = solve_static(problem)
    assert solution.regime is Regime.FREE_CONVICTION
    assert solution.conviction_prob == 1.0


def test_no_acquisition_for_small_reward():
    problem = StaticProblem(prior_effective=0.2, threshold_effective=0.6, reward=0.1, cost=VarianceCost(4.0, 0.2))
    solution = solve_static(problem)
    assert solution.regime is Regime.NO_ACQUISITION
    assert solution.conviction_prob == 0.0
    assert solution.low_posterior == solution.high_posterior == 0.2


def test_certainty_threshold_with_divergent_cost():
    problem = StaticProblem(prior_effective=0.3, threshold_effective=1.0, reward=5.0, cost=EntropyCost(0.3))
    assert solve_static(problem).regime is Regime.NO_ACQUISITION


def test_certainty_threshold_with_affordable_certainty():
    problem = StaticProblem(prior_effective=0.2, threshold_effective=1.0, reward=1.0, cost=VarianceCost(0.25, 0.2))
    with pytest.raises(DomainError):
        solve_static(problem)


def test_solution_beats_no_acquisition(running_problem):
    solution = solve_static(running_problem)
    assert solution_value(running_problem, solution) > float(running_problem.value(0.3))


def test_oracle_agrees_with_solver(running_problem, entropy_problem):
    for problem in (running_problem, entropy_problem):
        solved = solve_static(problem)
        oracle = solve_by_oracle(problem)
        assert oracle.experimental
        assert oracle.low_posterior == pytest.approx(solved.low_posterior, abs=1e-3)
        assert oracle.high_posterior == pytest.approx(solved.high_posterior, abs=1e-3)


def test_sample_value_function_contains_threshold(running_problem):
    xs, values = sample_value_function(running_problem, step=1e-3)
    assert np.all(np.diff(xs) > 0.0)
    assert np.any(xs == running_problem.threshold_effective)
    assert xs.shape == values.shape


def test_concavify_oracle_chord():
    result = concavify_oracle(np.array([0.0, 0.5, 1.0]), np.array([0.0, 0.0, 1.0]), 0.5)
    assert (result.low, result.high) == (0.0, 1.0)
    assert result.weight_high == pytest.approx(0.5)
    assert result.value == pytest.approx(0.5)


def test_concavify_oracle_vertex_at_prior():
    result = concavify_oracle(np.array([0.0, 0.5, 1.0]), np.array([0.0, 1.0, 0.0]), 0.5)
    assert result.low == result.high == 0.5
    assert result.value == pytest.approx(1.0)


def test_concavify_oracle_rejects_unsorted_grid():
    with pytest.raises(DomainError):
        concavify_oracle(np.array([0.0, 0.6, 0.5]), np.zeros(3), 0.5)


def test_concavify_oracle_rejects_prior_outside_grid():
    with pytest.raises(DomainError):
        concavify_oracle(np.array([0.2, 0.5]), np.zeros(2), 0.1)


def test_preference_shaped_reward_shifts_the_residual():
    shape = PreferenceShaped(eta=0.3, rho=1.0, v=1.0)
    problem = StaticProblem(
        prior_effective=0.4,
        threshold_effective=0.6,
        reward=1.0,
        cost=VarianceCost(4.0, 0.4),
        upper_payoff_shape=shape,
    )
    b = solve_foc_root(problem)
    assert b == pytest.approx(0.6 - np.sqrt(shape.effective_reward(0.6) / 4.0), abs=1e-9)


FAMILIES = ("variance", "entropy", "log_likelihood", "tsallis")


def random_problem(seed):
    rng = np.random.default_rng(seed)
    mu = rng.uniform(0.15, 0.45)
    threshold = min(mu + rng.uniform(0.1, 0.4), 0.9)
    reward = rng.uniform(0.2, 1.0)
    match FAMILIES[seed % len(FAMILIES)]:
        case "variance":
            cost = VarianceCost(rng.uniform(1.0, 6.0), mu)
        case "entropy":
            cost = EntropyCost(mu)
        case "log_likelihood":
            cost = LogLikelihoodCost(mu)
        case _:
            cost = TsallisCost(rng.uniform(1.0, 4.0), rng.uniform(1.5, 3.0), mu)
    return StaticProblem(prior_effective=mu, threshold_effective=threshold, reward=reward, cost=cost)


@pytest.mark.parametrize("seed", range(50))
def test_oracle_agrees_with_solver_on_random_problems(seed):
    problem = random_problem(seed)
    solved = solve_static(problem)
    oracle = solve_by_oracle(problem)
    assert solution_value(problem, oracle) == pytest.approx(solution_value(problem, solved), abs=5e-4)
    idle = float(problem.value(problem.prior_effective))
    if solved.regime is Regime.INTERIOR and solved.conviction_prob > 0.05 and solution_value(problem, solved) > idle + 1e-3:
        assert oracle.low_posterior == pytest.approx(solved.low_posterior, abs=1e-2)
        assert oracle.high_posterior == pytest.approx(solved.high_posterior, abs=1e-2)
