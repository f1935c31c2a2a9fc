import pytest


@pytest.fixture
def running_example():
    """True prior, investigator prior and conviction threshold of the running example."""
    return {"mu": 0.2, "mu_L": 0.3, "a": 0.6}
