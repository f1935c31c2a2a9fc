import pytest

from src.costs import EntropyCost, LogLikelihoodCost, TsallisCost, VarianceCost


@pytest.fixture
def variance_cost():
    return VarianceCost(kappa=4.0, prior=0.3)


@pytest.fixture
def smooth_costs():
    """One instance of every closed-form family, anchored at 0.3."""
    return [
        VarianceCost(4.0, 0.3),
        EntropyCost(0.3),
        LogLikelihoodCost(0.3),
        TsallisCost(1.0, 2.0, 0.3),
        TsallisCost(1.0, 0.5, 0.3),
    ]
