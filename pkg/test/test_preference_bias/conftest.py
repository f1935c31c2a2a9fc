import pytest

from src.costs import VarianceCost
from src.models import PreferenceParams


@pytest.fixture
def params():
    return PreferenceParams(eta=0.3, rho=1.0, v=1.0, a=0.6)


@pytest.fixture
def cost():
    return VarianceCost(4.0, 0.4)
