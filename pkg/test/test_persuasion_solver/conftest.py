import pytest

from src.application.belief_geometry import effective_threshold_biased_L
from src.costs import EntropyCost, VarianceCost
from src.models import StaticProblem


@pytest.fixture
def running_problem():
    """Investigator with prior 0.3 facing the threshold 0.72 that convinces an unbiased DM at 0.6."""
    return StaticProblem(
        prior_effective=0.3,
        threshold_effective=effective_threshold_biased_L(0.2, 0.3, 0.6),
        reward=1.0,
        cost=VarianceCost(4.0, 0.3),
    )


@pytest.fixture
def entropy_problem():
    return StaticProblem(prior_effective=0.3, threshold_effective=0.6, reward=0.3, cost=EntropyCost(0.3))
