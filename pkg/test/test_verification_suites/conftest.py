import pytest


@pytest.fixture
def non_binding(monkeypatch):
    class NonBinding:
        binding = False

    monkeypatch.setattr(
        "src.application.verification_suites.solve_preference", lambda params, mu, cost: NonBinding()
    )
