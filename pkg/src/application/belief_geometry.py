"""
belief_geometry.py

Belief arithmetic between agents that disagree only about the prior.

A posterior held under one prior maps to the posterior another observer holds after
the same evidence by scaling posterior odds with the ratio of prior odds. The
effective conviction thresholds follow from that map: a_L is the belief the biased
investigator must reach so that the unbiased decision-maker reaches a, and a_DM is
the belief an unbiased investigator must reach so that the biased decision-maker
reaches a.

All functions are pure and accept floats or numpy arrays for the posterior.
"""

import numpy as np

from src.abstractions import DomainError, FloatOrArray
from src.application.settings import SETTINGS


def _require_interior(**priors: float) -> None:
    for name, value in priors.items():
        if not 0.0 < value < 1.0:
            raise DomainError(f"{name} must lie strictly between 0 and 1, got {value}")


def _require_bias_direction(mu: float, biased: float, name: str) -> None:
    if biased < mu - SETTINGS.tolerances.belief_equality:
        raise DomainError(f"{name}={biased} is below the true prior mu={mu}; only bias toward guilt is modelled")


def odds(x: FloatOrArray) -> FloatOrArray:
    return x / (1.0 - x)


def reprior(x: FloatOrArray, from_prior: float, to_prior: float) -> FloatOrArray:
    """
    Posterior of an observer with prior `to_prior` after evidence that moves an
    observer with prior `from_prior` to x. Certainty maps to certainty.
    """
    _require_interior(from_prior=from_prior, to_prior=to_prior)
    values = np.asarray(x, dtype=float)
    if np.any(values < 0.0) or np.any(values > 1.0):
        raise DomainError("Posterior must lie in [0, 1]")
    ratio = odds(to_prior) / odds(from_prior)
    mapped = ratio * values / (ratio * values + (1.0 - values))
    return mapped if isinstance(x, np.ndarray) else float(mapped)


def effective_threshold_biased_L(mu: float, mu_L: float, a: float) -> float:
    """a_L = (1 - mu) mu_L a / ((mu_L - mu) a + mu (1 - mu_L))."""
    _require_interior(mu=mu, mu_L=mu_L)
    _require_bias_direction(mu, mu_L, "mu_L")
    if not mu < a <= 1.0:
        raise DomainError(f"Threshold must satisfy mu < a <= 1, got mu={mu}, a={a}")
    return float(reprior(a, mu, mu_L))


def effective_threshold_biased_DM(mu: float, mu_DM: float, a: float) -> float:
    """a_DM = (1 - mu_DM) mu a / ((mu - mu_DM) a + mu_DM (1 - mu)); at most mu once mu_DM >= a."""
    _require_interior(mu=mu, mu_DM=mu_DM)
    _require_bias_direction(mu, mu_DM, "mu_DM")
    if not mu < a <= 1.0:
        raise DomainError(f"Threshold must satisfy mu < a <= 1, got mu={mu}, a={a}")
    return float(reprior(a, mu_DM, mu))


def threshold_biased_DM_derivative(mu: float, mu_DM: float, a: float) -> float:
    """Closed-form derivative of a_DM in mu_DM."""
    _require_interior(mu=mu, mu_DM=mu_DM)
    denominator = (mu - mu_DM) * a + mu_DM * (1.0 - mu)
    return -(1.0 - mu) * mu * (1.0 - a) * a / denominator**2
