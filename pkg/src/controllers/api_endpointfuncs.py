"""
api_endpointfuncs.py
~~~~~~~~~~~~~~~~~~~

Controller functions for the biased evidence acquisition service.

Each function takes a validated request model, calls the application layer and returns
the response envelope {"status_code", "message", "content"}. The same functions back
the HTTP routes and the command-line commands; errors from the application layer
(DomainError, NumericError) are raised unchanged and mapped by the framework adapters.

Functions:
    get_root(): API information and available endpoints
    solve(): static solution and conviction probabilities of a scenario
    sweep(): belief bias sweep table
    verify(): verification suite verdicts
    figure(): value function and concavification polylines
    simulate(): sequential sampling run checked against the static solution
"""

from typing import Any

from src.application import (
    figure_for,
    run_suite,
    simulate_scenario,
    solve_scenario,
    sweep_scenario,
)
from src.models import (
    FigureRequest,
    SimulateRequest,
    SolveRequest,
    SweepRequest,
    VerifyRequest,
)
from src.utils import get_logger, iter_rows

logger = get_logger("cli.log")

VERSION = "1.0.0"


def get_root() -> dict[str, Any]:
    """
    Return API information and the available endpoints.
    """
    return {
        "message": "Biased evidence acquisition service",
        "description": "Solves, sweeps and simulates costly evidence gathering under belief and preference bias.",
        "version": VERSION,
        "endpoints": {
            "/solve": "Static solution and conviction probabilities of a scenario.",
            "/sweep": "Bias sweep over a start:stop:step grid of subjective priors.",
            "/verify": "Runs a named verification suite, or all of them.",
            "/figure": "Perceived and actual value functions with their concavifications.",
            "/docs": "API documentation (Swagger UI).",
            "/openapi.json": "OpenAPI schema.",
        },
    }


def solve(request: SolveRequest) -> dict[str, Any]:
    report = solve_scenario(request.scenario)
    return {
        "status_code": 200,
        "message": f"Solved: regime {report.solution.regime.value}",
        "content": report.model_dump(mode="json"),
    }


def sweep(request: SweepRequest) -> dict[str, Any]:
    """
    Sweep the subjective prior of the biased party. `who` defaults to the scenario's
    bias block; preference bias has no belief to sweep.
    """
    rows = sweep_scenario(request.scenario, request.grid, request.who, request.include_boundaries)
    return {
        "status_code": 200,
        "message": f"{len(rows)} rows",
        "content": {"rows": list(iter_rows(rows))},
    }


def verify(request: VerifyRequest) -> dict[str, Any]:
    verdicts = run_suite(request.suite, request.quick)
    failed = [verdict.claim for verdict in verdicts if not verdict.passed]
    if failed:
        logger.warning(f"Suite '{request.suite}': {len(failed)} of {len(verdicts)} claims failed: {failed}")
    return {
        "status_code": 200,
        "message": f"{len(verdicts) - len(failed)} of {len(verdicts)} claims passed",
        "content": {
            "suite": request.suite,
            "passed": not failed,
            "verdicts": list(iter_rows(verdicts)),
        },
    }


def figure(request: FigureRequest) -> dict[str, Any]:
    data = figure_for(request.scenario, request.case)
    return {
        "status_code": 200,
        "message": f"x_DM(b_L) > b: {str(data.metadata.x_DM_of_b_L_exceeds_b).lower()}",
        "content": {
            "points": list(iter_rows(data.points)),
            "metadata": data.metadata.model_dump(mode="json"),
        },
    }


def simulate(request: SimulateRequest) -> dict[str, Any]:
    report, paths = simulate_scenario(request.scenario, request.quick, request.record_paths)
    content = report.model_dump(mode="json")
    content["paths"] = paths
    return {
        "status_code": 200,
        "message": f"Equivalence checks passed: {str(report.passed).lower()}",
        "content": content,
    }
