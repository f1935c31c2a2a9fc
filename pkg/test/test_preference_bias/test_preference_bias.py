import math

import pytest
from pydantic import ValidationError

from src.abstractions import DomainError
from src.application.preference_bias import (
    check_assumption1,
    preference_problem,
    preference_statics,
    preference_value,
    residual_partials,
    solve_preference,
)
from src.models import PreferenceParams, Regime, StaticsEntry

MU = 0.4


def test_binding_solution(params, cost):
    result = solve_preference(params, MU, cost)
    assert result.binding
    assert result.solution.regime is Regime.INTERIOR
    assert result.solution.low_posterior == pytest.approx(0.6 - math.sqrt(0.19), abs=1e-7)
    assert result.solution.high_posterior == pytest.approx(0.6)
    assert result.solution.conviction_prob == pytest.approx(0.541168, abs=1e-6)
    assert result.outcome.lambda_ == pytest.approx(0.360779, abs=1e-6)
    assert result.outcome.gamma == pytest.approx(0.811752, abs=1e-6)
    assert not result.solution.experimental


def test_effective_reward(params):
    assert params.shape.effective_reward(params.a) == pytest.approx(0.76)


def test_preference_value(params, cost):
    assert preference_value(0.6, params, cost) == pytest.approx(0.42)
    assert preference_value(0.0, params, cost) == pytest.approx(-0.64)
    with pytest.raises(DomainError):
        preference_value(1.2, params, cost)


def test_problem_requires_threshold_above_prior(params, cost):
    with pytest.raises(DomainError):
        preference_problem(params, 0.7, cost)


def test_assumption_report(params, cost):
    report = check_assumption1(params, MU, cost, 0.6 - math.sqrt(0.19))
    assert report.holds
    assert report.slope_lhs == pytest.approx(1.58712, abs=1e-5)
    assert report.slope_rhs == pytest.approx(-1.3)
    assert report.failed_clauses == []


def test_residual_partials(params, cost):
    partials = residual_partials(params, cost, 0.6 - math.sqrt(0.19))
    assert partials["v"] == pytest.approx(0.7)
    assert partials["rho"] == pytest.approx(-0.12)
    assert partials["eta"] == pytest.approx(-0.8)
    assert partials["b"] > 0.0


def test_non_binding_falls_back_to_oracle(cost):
    params = PreferenceParams(eta=0.3, rho=1.0, v=0.05, a=0.6)
    result = solve_preference(params, MU, cost)
    assert not result.binding
    assert "mu in (b, a)" in result.assumption.failed_clauses
    assert result.solution.experimental


def test_threshold_below_investigator_cutoff():
    with pytest.raises(ValidationError, match="Threshold constraint violated"):
        PreferenceParams(eta=0.9, rho=5.0, v=0.1, a=0.6)


def test_unbiased_preferences_leave_threshold_free():
    params = PreferenceParams(eta=0.0, rho=10.0, v=1.0, a=0.05)
    assert params.shape.effective_reward(params.a) == pytest.approx(1.0)


def test_lower_threshold_raises_wrongful_convictions(params, cost):
    lowered = solve_preference(PreferenceParams(eta=0.3, rho=1.0, v=1.0, a=0.58), MU, cost)
    assert lowered.outcome.lambda_ == pytest.approx(0.40863, abs=1e-4)
    assert lowered.outcome.lambda_ > solve_preference(params, MU, cost).outcome.lambda_


def test_statics(params, cost):
    report = preference_statics(params, MU, cost)
    assert report.passed
    assert report.bias_raises_lambda
    by_name = {entry.parameter: entry for entry in report.entries}
    assert set(by_name) == {"a", "v", "rho", "eta"}
    for entry in report.entries:
        assert entry.numeric_slope == pytest.approx(entry.analytic_slope, rel=1e-3, abs=1e-6)
    assert by_name["a"].analytic_slope == pytest.approx(-2.31, abs=0.01)
    assert by_name["eta"].expected_sign == -1


def test_statics_need_binding_point(cost):
    params = PreferenceParams(eta=0.3, rho=1.0, v=0.05, a=0.6)
    with pytest.raises(DomainError, match="binding"):
        preference_statics(params, MU, cost)


@pytest.mark.parametrize(
    ("numeric", "analytic", "expected_sign", "weak", "agrees"),
    [
        (-0.5, -0.49, -1, False, True),
        (-0.5, 0.49, -1, False, False),
        (0.5, 0.49, -1, False, False),
        (0.0, 0.0, -1, False, False),
        (0.0, 0.0, -1, True, True),
        (0.0, -0.2, -1, True, True),
        (0.3, 0.0, -1, True, False),
        (0.0, 0.0, 0, False, True),
        (0.1, -0.1, 0, False, False),
    ],
)
def test_statics_entry_compares_numeric_and_analytic_signs(numeric, analytic, expected_sign, weak, agrees):
    entry = StaticsEntry(
        parameter="rho",
        numeric_slope=numeric,
        analytic_slope=analytic,
        expected_sign=expected_sign,
        step=1e-4,
        weak=weak,
    )
    assert entry.agrees is agrees


def test_statics_without_correctness_weight(cost):
    params = PreferenceParams(eta=0.0, rho=1.0, v=1.0, a=0.6)
    report = preference_statics(params, MU, cost)
    by_name = {entry.parameter: entry for entry in report.entries}
    assert by_name["rho"].weak
    assert by_name["rho"].numeric_slope == pytest.approx(0.0, abs=1e-9)
    assert by_name["rho"].analytic_slope == pytest.approx(0.0, abs=1e-12)
    assert by_name["eta"].numeric_slope == pytest.approx(by_name["eta"].analytic_slope, rel=1e-3)
    assert report.passed
