import numpy as np
import pytest
from pydantic import ValidationError

from src.abstractions import DomainError, NumericError
from src.application.settings import SETTINGS
from src.application.wald_simulator import (
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
from src.costs import VarianceCost
from src.models import Regime, StaticSolution


def test_filter_belief():
    assert filter_belief(0.1, 0.5, 1.0, 0.01) == pytest.approx(0.549834, abs=1e-6)
    assert filter_belief(0.0, 0.3, 2.0, 0.01) == pytest.approx(0.3)


@pytest.mark.parametrize("dt", [1e-4, 1e-2, 0.5])
def test_filter_belief_matches_log_odds_increment(dt):
    rng = np.random.default_rng(7)
    sigma, belief = 1.5, 0.3
    for theta in (1, -1):
        eps = rng.standard_normal()
        dz = theta * dt + sigma * np.sqrt(dt) * eps
        step = 2.0 * theta / sigma**2 * dt + 2.0 / sigma * np.sqrt(dt) * eps
        expected = 1.0 / (1.0 + (1.0 - belief) / belief * np.exp(-step))
        assert filter_belief(dz, belief, sigma, dt) == pytest.approx(expected, rel=1e-9)


def test_filter_belief_rejects_bad_inputs():
    with pytest.raises(DomainError):
        filter_belief(0.1, 0.5, 1.0, 0.0)
    with pytest.raises(DomainError):
        filter_belief(0.1, 0.5, 0.0, 0.01)
    with pytest.raises(DomainError):
        filter_belief(0.1, 1.0, 1.0, 0.01)


def test_path_streams_are_reproducible():
    first = path_generator(3, 11).random(5)
    again = path_generator(3, 11).random(5)
    other = path_generator(3, 12).random(5)
    np.testing.assert_array_equal(first, again)
    assert not np.array_equal(first, other)


def test_boundaries_of_degenerate_solutions():
    silent = StaticSolution(
        regime=Regime.NO_ACQUISITION, prior=0.2, low_posterior=0.2, high_posterior=0.2, conviction_prob=0.0
    )
    free = StaticSolution(
        regime=Regime.FREE_CONVICTION, prior=0.2, low_posterior=0.2, high_posterior=0.2, conviction_prob=1.0
    )
    assert boundaries_for(silent) == (0.2, 1.0)
    assert boundaries_for(free) == (0.0, 0.2)


def test_boundary_at_zero_is_clipped():
    corner = StaticSolution(
        regime=Regime.INTERIOR,
        prior=0.2,
        low_posterior=0.0,
        high_posterior=0.466667,
        conviction_prob=0.428571,
        at_lower_corner=True,
    )
    assert boundaries_for(corner) == (SETTINGS.quadrature.clip, 0.466667)


def test_running_boundaries(running_solution):
    low, high = boundaries_for(running_solution)
    assert low == pytest.approx(0.22, abs=1e-9)
    assert high == pytest.approx(0.72, abs=1e-9)


def test_predicted_hit_probability(running_solution):
    assert predicted_hit_probability(running_solution, "prior") == pytest.approx(0.16, abs=1e-9)
    assert predicted_hit_probability(running_solution, "guilty") == pytest.approx(0.384, abs=1e-9)
    assert predicted_hit_probability(running_solution, "innocent") == pytest.approx(0.064, abs=1e-9)


def test_default_step_scales_with_noise(running_problem, running_solution):
    config = sim_config_for(running_solution, running_problem.cost, sigma=2.0, n_paths=10)
    assert config.dt == pytest.approx(SETTINGS.simulation.dt_factor * 4.0)
    assert config.theta_prior == pytest.approx(0.3)
    assert "flow_cost" not in config.model_dump(mode="json")


def test_config_rejects_coarse_step(running_problem, running_solution):
    with pytest.raises(ValidationError, match="resolution guard"):
        sim_config_for(running_solution, running_problem.cost, sigma=1.0, n_paths=10, dt=1e-2)


def test_results_do_not_depend_on_block_size(coarse_config):
    reference = simulate_paths(coarse_config)
    blocked = simulate_paths(coarse_config.model_copy(update={"block_size": 7}))
    for left, right in zip(reference, blocked):
        np.testing.assert_array_equal(left, right)
    np.testing.assert_array_equal(reference.path, np.arange(60))


def test_paths_stop_inside_the_support(coarse_config):
    table = simulate_paths(coarse_config)
    assert not table.truncated.any()
    assert (table.stop_time > 0.0).all()
    assert (table.cost > 0.0).all()
    assert set(np.unique(table.theta)) <= {-1, 1}


def test_degenerate_paths_stop_at_once():
    silent = StaticSolution(
        regime=Regime.NO_ACQUISITION, prior=0.2, low_posterior=0.2, high_posterior=0.2, conviction_prob=0.0
    )
    config = sim_config_for(silent, VarianceCost(4.0, 0.2), sigma=1.0, n_paths=5)
    table = simulate_paths(config)
    assert not table.hit_high.any()
    assert (table.stop_time == 0.0).all()
    assert (table.cost == 0.0).all()


def test_free_conviction_paths_hit_high():
    free = StaticSolution(
        regime=Regime.FREE_CONVICTION, prior=0.2, low_posterior=0.2, high_posterior=0.2, conviction_prob=1.0
    )
    config = sim_config_for(free, VarianceCost(4.0, 0.2), sigma=1.0, n_paths=5)
    assert simulate_paths(config).hit_high.all()


def test_truncation_raises(coarse_config):
    config = coarse_config.model_copy(update={"max_steps": 10})
    table = simulate_paths(config)
    assert table.truncated.any()
    with pytest.raises(NumericError, match="truncated"):
        summarize(config, table)


def test_conditional_modes(running_problem, running_solution):
    config = sim_config_for(
        running_solution, running_problem.cost, sigma=1.0, n_paths=20, dt=1e-3, theta_mode="guilty"
    )
    table = simulate_paths(config)
    assert (table.theta == 1).all()
    stats = summarize(config, table)
    assert set(stats.per_theta) == {"guilty"}


def test_true_cost_tracking(running_problem, running_solution):
    config = sim_config_for(
        running_solution, running_problem.cost, sigma=1.0, n_paths=20, dt=1e-3, true_prior=0.2
    )
    stats = summarize(config, simulate_paths(config))
    assert stats.mean_true_cost is not None
    assert stats.mean_true_cost != stats.mean_flow_cost


@pytest.mark.slow
def test_simulation_matches_static_solution(running_problem, running_solution):
    config = sim_config_for(running_solution, running_problem.cost, sigma=1.0, n_paths=2000, seed=2024)
    report = validate_equivalence(running_solution, running_problem.cost, config)
    assert report.static_cost == pytest.approx(0.1344, abs=1e-6)
    assert report.predicted_conviction_prob == pytest.approx(0.16, abs=1e-9)
    assert [check.claim for check in report.checks] == [
        "hit_high_frequency",
        "mean_flow_cost",
        "stopped_belief_mean",
    ]
    assert report.passed


def test_run_paths_summary(coarse_config):
    stats = run_paths(coarse_config)
    assert stats.n_paths == 60
    assert stats.truncated == 0
    assert stats.hit_high_freq + stats.hit_low_freq == pytest.approx(1.0)
    assert coarse_config.boundaries[0] <= stats.stopped_belief_mean <= coarse_config.boundaries[1]
    assert sum(group.n_paths for group in stats.per_theta.values()) == 60
