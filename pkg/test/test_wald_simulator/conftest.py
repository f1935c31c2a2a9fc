import pytest

from src.application.bias_analysis import biased_problem
from src.application.persuasion_solver import solve_static
from src.application.wald_simulator import sim_config_for
from src.costs import VarianceCost


@pytest.fixture
def running_problem():
    problem, _ = biased_problem("L", 0.2, 0.3, 0.6, 1.0, VarianceCost(4.0, 0.2))
    return problem


@pytest.fixture
def running_solution(running_problem):
    return solve_static(running_problem)


@pytest.fixture
def coarse_config(running_problem, running_solution):
    return sim_config_for(running_solution, running_problem.cost, sigma=1.0, n_paths=60, seed=7, dt=1e-3)
