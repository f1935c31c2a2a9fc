import numpy as np
import pytest

from src.abstractions import DomainError
from src.application.belief_geometry import (
    effective_threshold_biased_DM,
    effective_threshold_biased_L,
    odds,
    reprior,
    threshold_biased_DM_derivative,
)


def test_odds():
    assert odds(0.2) == pytest.approx(0.25)
    np.testing.assert_allclose(odds(np.array([0.5, 0.75])), [1.0, 3.0])


def test_reprior_value():
    assert reprior(0.5, 0.3, 0.2) == pytest.approx(0.368421, abs=1e-6)


def test_reprior_keeps_certainty():
    assert reprior(0.0, 0.3, 0.2) == 0.0
    assert reprior(1.0, 0.3, 0.2) == 1.0


def test_reprior_is_invertible():
    xs = np.linspace(0.01, 0.99, 25)
    back = reprior(reprior(xs, 0.3, 0.2), 0.2, 0.3)
    np.testing.assert_allclose(back, xs, atol=1e-12)


def test_reprior_returns_float_for_float():
    assert isinstance(reprior(0.4, 0.3, 0.2), float)


def test_reprior_rejects_degenerate_priors():
    with pytest.raises(DomainError):
        reprior(0.5, 0.0, 0.2)
    with pytest.raises(DomainError):
        reprior(0.5, 0.3, 1.0)


def test_reprior_rejects_beliefs_outside_unit_interval():
    with pytest.raises(DomainError):
        reprior(1.2, 0.3, 0.2)


def test_effective_threshold_biased_L(running_example):
    a_L = effective_threshold_biased_L(running_example["mu"], running_example["mu_L"], running_example["a"])
    assert a_L == pytest.approx(0.72, abs=1e-12)


def test_effective_threshold_biased_DM(running_example):
    a_DM = effective_threshold_biased_DM(running_example["mu"], running_example["mu_L"], running_example["a"])
    assert a_DM == pytest.approx(0.466667, abs=1e-6)


def test_thresholds_without_bias_are_unchanged():
    assert effective_threshold_biased_L(0.2, 0.2, 0.6) == pytest.approx(0.6)
    assert effective_threshold_biased_DM(0.2, 0.2, 0.6) == pytest.approx(0.6)


def test_threshold_one_stays_one():
    assert effective_threshold_biased_L(0.2, 0.3, 1.0) == 1.0


def test_biased_DM_threshold_falls_to_prior_when_bias_reaches_threshold():
    assert effective_threshold_biased_DM(0.2, 0.6, 0.6) == pytest.approx(0.2)


def test_bias_toward_innocence_is_rejected():
    with pytest.raises(DomainError):
        effective_threshold_biased_L(0.3, 0.2, 0.6)
    with pytest.raises(DomainError):
        effective_threshold_biased_DM(0.3, 0.2, 0.6)


def test_threshold_below_prior_is_rejected():
    with pytest.raises(DomainError):
        effective_threshold_biased_L(0.6, 0.7, 0.5)


def test_threshold_biased_DM_derivative_matches_finite_difference():
    mu, mu_dm, a, step = 0.2, 0.3, 0.6, 1e-6
    numeric = (
        effective_threshold_biased_DM(mu, mu_dm + step, a) - effective_threshold_biased_DM(mu, mu_dm - step, a)
    ) / (2 * step)
    assert threshold_biased_DM_derivative(mu, mu_dm, a) == pytest.approx(numeric, rel=1e-6)
    assert threshold_biased_DM_derivative(mu, mu_dm, a) < 0.0


GRID = np.linspace(0.02, 0.98, 20)


@pytest.mark.parametrize("mu", np.linspace(0.05, 0.75, 20))
def test_effective_thresholds_across_grid(mu):
    h = 1e-6
    for mu_b in mu + (1.0 - mu) * GRID * 0.95:
        for a in mu + (1.0 - mu) * GRID:
            a_l = effective_threshold_biased_L(mu, mu_b, a)
            a_dm = effective_threshold_biased_DM(mu, mu_b, a)
            assert a_l == pytest.approx((1 - mu) * mu_b * a / ((mu_b - mu) * a + mu * (1 - mu_b)), rel=1e-10)
            assert a_l == pytest.approx(reprior(a, mu, mu_b), rel=1e-10)
            assert a_dm == pytest.approx((1 - mu_b) * mu * a / ((mu - mu_b) * a + mu_b * (1 - mu)), rel=1e-10)
            assert a_dm == pytest.approx(reprior(a, mu_b, mu), rel=1e-10)
            assert a_l >= a - 1e-12
            assert a_dm <= a + 1e-12
            if a < 1.0:
                assert effective_threshold_biased_L(mu, mu_b + h, a) > a_l
                slope = threshold_biased_DM_derivative(mu, mu_b, a)
                assert slope < 0.0
                numeric = (effective_threshold_biased_DM(mu, mu_b + h, a) - effective_threshold_biased_DM(mu, mu_b - h, a)) / (2 * h)
                assert numeric == pytest.approx(slope, rel=1e-4)
