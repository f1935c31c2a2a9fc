from .frameworks import ArgparseFramework, FastApiFramework
from .specs import (
    API_SPEC,
    figure_spec,
    root_spec,
    simulate_spec,
    solve_spec,
    sweep_spec,
    verify_spec,
)

__all__ = [
    "API_SPEC",
    "ArgparseFramework",
    "FastApiFramework",
    "figure_spec",
    "root_spec",
    "simulate_spec",
    "solve_spec",
    "sweep_spec",
    "verify_spec",
]
