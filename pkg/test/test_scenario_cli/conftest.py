import json
from argparse import ArgumentParser

import pytest
from fastapi import FastAPI
from fastapi.testclient import TestClient

from src.controllers import API_SPEC, ArgparseFramework, FastApiFramework

RUNNING_EXAMPLE = {
    "mu": 0.2,
    "a": 0.6,
    "v": 1.0,
    "sigma": 1.0,
    "cost": {"family": "variance", "kappa": 4.0},
    "bias": {"who": "L", "mu_B": 0.3},
}


@pytest.fixture
def cli():
    return ArgparseFramework.from_constructor(
        app_type=ArgumentParser, title="biased-evidence", version="1.0.0", api_spec=API_SPEC
    )


@pytest.fixture
def client():
    app = FastApiFramework.from_constructor(
        app_type=FastAPI, title="biased-evidence", version="1.0.0", api_spec=API_SPEC
    ).get_app()
    return TestClient(app)


@pytest.fixture
def running_scenario():
    return dict(RUNNING_EXAMPLE)


@pytest.fixture
def scenario_path(tmp_path, running_scenario):
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps(running_scenario), encoding="utf-8")
    return path


@pytest.fixture
def entropy_path(tmp_path):
    path = tmp_path / "entropy.json"
    path.write_text(
        json.dumps({"mu": 0.3, "a": 0.6, "v": 0.3, "sigma": 1.0, "cost": {"family": "entropy"}}),
        encoding="utf-8",
    )
    return path
