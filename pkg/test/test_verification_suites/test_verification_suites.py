import numpy as np
import pytest

from src.abstractions import DomainError
from src.application.bias_analysis import lemma1_classify, min_reward_ratio
from src.application.settings import SETTINGS
from src.application.verification_suites import SUITES, run_suite

ANALYTIC_SUITES = [name for name in SUITES if name != "equivalence"]


@pytest.mark.parametrize("name", ANALYTIC_SUITES)
def test_quick_suite_passes(name):
    verdicts = run_suite(name, quick=True)
    assert verdicts
    assert [verdict.claim for verdict in verdicts if not verdict.passed] == []
    assert all(type(verdict.passed) is bool for verdict in verdicts)


def test_lemma1_suite_passes():
    verdicts = {verdict.claim: verdict for verdict in run_suite("lemma1", quick=True)}
    assert verdicts["lemma1_slope_sign"].passed
    assert verdicts["lemma1_peak_location"].passed
    assert verdicts["lemma1_peak_location"].observed <= 1e-3


def test_lemma1_full_grid_follows_settings():
    verdicts = run_suite("lemma1")
    assert all(verdict.passed for verdict in verdicts)
    assert {verdict.parameters["grid"] for verdict in verdicts} == {float(SETTINGS.verification.grid_size)}


def test_reward_ratio_peak_above_threshold():
    mu, a = 0.05, 0.1
    dagger = lemma1_classify(mu, a).mu_L_dagger
    assert dagger == pytest.approx(0.4077, abs=1e-4)
    assert dagger > a
    xs = np.arange(mu, 1.0, 1e-4)
    peak = xs[int(np.argmax([min_reward_ratio(mu, x, a) for x in xs]))]
    assert peak == pytest.approx(dagger, abs=1e-4)


def test_prop5_without_binding_points_fails(non_binding):
    verdicts = run_suite("prop5", quick=True)
    assert [verdict.claim for verdict in verdicts] == ["prop5_binding_points"]
    assert verdicts[0].passed is False


def test_unknown_suite():
    with pytest.raises(DomainError, match="Unknown suite"):
        run_suite("prop9")


@pytest.mark.slow
def test_equivalence_suite_passes():
    assert all(verdict.passed for verdict in run_suite("equivalence", quick=True))
