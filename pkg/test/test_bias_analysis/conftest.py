import pytest

from src.costs import VarianceCost
from src.models import ScenarioFile


@pytest.fixture
def running_scenario():
    return ScenarioFile.model_validate(
        {
            "mu": 0.2,
            "a": 0.6,
            "v": 1.0,
            "sigma": 1.0,
            "cost": {"family": "variance", "kappa": 4.0},
            "bias": {"who": "L", "mu_B": 0.3},
        }
    )


@pytest.fixture
def variance_cost():
    return VarianceCost(4.0, 0.2)
