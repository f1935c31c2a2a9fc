"""
figure_data.py

Polylines of the biased investigator's value function and its concavification,
both as the investigator perceives them and along the beliefs an unbiased observer
would hold after the same evidence.
"""

import math
from typing import Optional

import numpy as np

from src.abstractions import DomainError
from src.application.belief_geometry import effective_threshold_biased_L, reprior
from src.application.persuasion_solver import concavify_oracle, sample_value_function, solve_foc_root
from src.application.settings import SETTINGS
from src.costs import VarianceCost
from src.models import FigureData, FigureMetadata, FigurePoint, FigureSeries, ScenarioFile, StaticProblem, VarianceSpec
from src.utils import get_logger

logger = get_logger("figure.log")


def _points(series: FigureSeries, xs: np.ndarray, ys: np.ndarray) -> list[FigurePoint]:
    return [FigurePoint(series=series, x=float(x), y=float(y)) for x, y in zip(xs, ys)]


def figure_series(mu: float, mu_L: float, a: float, kappa: float, v: float, step: Optional[float] = None) -> FigureData:
    """
    Perceived series live on the investigator's beliefs; actual series carry the same
    values to the repriored beliefs, where conviction happens at a instead of a_L.
    """
    step = SETTINGS.figure.grid_step if step is None else step
    a_l = effective_threshold_biased_L(mu, mu_L, a)
    biased = StaticProblem(prior_effective=mu_L, threshold_effective=a_l, reward=v, cost=VarianceCost(kappa, mu_L))
    xs, values = sample_value_function(biased, step)
    perceived = concavify_oracle(xs, values, mu_L)

    actual_x = np.asarray(reprior(xs, mu_L, mu))
    actual = concavify_oracle(actual_x, values, mu)

    unbiased = StaticProblem(prior_effective=mu, threshold_effective=a, reward=v, cost=VarianceCost(kappa, mu))
    b_l = solve_foc_root(biased)
    b = solve_foc_root(unbiased)
    x_dm = float(reprior(b_l, mu_L, mu))
    metadata = FigureMetadata(
        mu=mu,
        mu_L=mu_L,
        a=a,
        a_L=a_l,
        d=math.sqrt(v / kappa),
        b_L=b_l,
        x_DM_of_b_L=x_dm,
        b_unbiased=b,
        x_DM_of_b_L_exceeds_b=x_dm > b,
    )
    logger.info(f"x_DM(b_L)={x_dm:.6g} against unbiased b={b:.6g}")
    return FigureData(
        points=[
            *_points("perceived_V", xs, values),
            *_points("perceived_concavification", perceived.envelope_x, perceived.envelope_y),
            *_points("actual_V", actual_x, values),
            *_points("actual_concavification", actual.envelope_x, actual.envelope_y),
        ],
        metadata=metadata,
    )


def figure_for(scenario: ScenarioFile, case: Optional[str] = None) -> FigureData:
    """
    Figure data for a variance-cost scenario, or for one of the configured cases.

    Raises:
        DomainError: For non-variance costs or unknown cases.
    """
    if not isinstance(scenario.cost, VarianceSpec):
        raise DomainError(f"Figure data needs the variance cost, got '{scenario.cost.family}'")
    if case is None:
        return figure_series(scenario.mu, scenario.mu_B, scenario.a, scenario.cost.kappa, scenario.v)
    preset = SETTINGS.figure.cases.get(case)
    if preset is None:
        raise DomainError(f"Unknown figure case '{case}', expected one of {sorted(SETTINGS.figure.cases)}")
    return figure_series(preset.mu, preset.mu_L, preset.a, preset.kappa, preset.v)
