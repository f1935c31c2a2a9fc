"""
specs.py

Endpoint Specifications Module

This module defines the endpoint specifications of the biased evidence acquisition
service. Each specification configures the HTTP route and the command-line command of
one handler.

Every handler must be a synchronous ControllerFunction taking at most its request model.

Endpoints:
    - GET /: API information
    - POST /solve, command `solve`: static solution of a scenario
    - POST /sweep, command `sweep`: bias sweep table (CSV on the command line)
    - POST /verify, command `verify`: verification suites
    - POST /figure, command `figure`: value function polylines (CSV on the command line)
    - command `simulate`: sequential sampling run, command line only

Raises:
    TypeError: If any handler function doesn't conform to ControllerFunction
"""

from src.abstractions import ControllerFunction, protocol_checker
from src.models import (
    APIInfoResponse,
    CliArgument,
    EndpointSpec,
    FastApiPostResponse,
    FigureRequest,
    SimulateRequest,
    SolveRequest,
    SweepRequest,
    VerifyRequest,
)
from .api_endpointfuncs import figure, get_root, simulate, solve, sweep, verify

_offending = protocol_checker([get_root, solve, sweep, verify, figure, simulate])
if _offending:
    raise TypeError(f"Handlers must conform to {ControllerFunction.__name__}: {', '.join(_offending)}")


SCENARIO_ARGUMENT = CliArgument(("scenario",), {"help": "Path to a scenario JSON file"})
OUT_ARGUMENT = CliArgument(("--out",), {"default": None, "help": "CSV destination; stdout when omitted"})
QUICK_ARGUMENT = CliArgument(("--quick",), {"action": "store_true", "help": "Reduced path counts and grids"})

root_spec = EndpointSpec(
    path="/",
    handler=get_root,
    required_params=["GET"],
    response_model=APIInfoResponse,
)

solve_spec = EndpointSpec(
    path="/solve",
    handler=solve,
    required_params=["POST"],
    response_model=FastApiPostResponse,
    request_model=SolveRequest,
    command="solve",
    cli_arguments=(SCENARIO_ARGUMENT,),
    help="Solve a scenario and print its static solution as JSON",
)

sweep_spec = EndpointSpec(
    path="/sweep",
    handler=sweep,
    required_params=["POST"],
    response_model=FastApiPostResponse,
    request_model=SweepRequest,
    command="sweep",
    cli_arguments=(
        SCENARIO_ARGUMENT,
        CliArgument(("--who",), {"choices": ["L", "DM"], "default": None, "help": "Biased party; defaults to the scenario's"}),
        CliArgument(("--grid",), {"required": True, "help": "Subjective priors as start:stop:step"}),
        CliArgument(
            ("--include-boundaries",),
            {"action": "store_true", "dest": "include_boundaries", "help": "Add rows either side of regime changes"},
        ),
        OUT_ARGUMENT,
    ),
    help="Sweep a belief bias and write the table as CSV",
    tables=(("rows", "out"),),
)

verify_spec = EndpointSpec(
    path="/verify",
    handler=verify,
    required_params=["POST"],
    response_model=FastApiPostResponse,
    request_model=VerifyRequest,
    command="verify",
    cli_arguments=(
        CliArgument(
            ("--suite",),
            {
                "default": "all",
                "help": "remark1, lemma1, thm1, prop1, prop3, thm2, prop4, prop5, equivalence or all",
            },
        ),
        QUICK_ARGUMENT,
    ),
    help="Run verification suites and print the verdicts as JSON",
)

figure_spec = EndpointSpec(
    path="/figure",
    handler=figure,
    required_params=["POST"],
    response_model=FastApiPostResponse,
    request_model=FigureRequest,
    command="figure",
    cli_arguments=(
        SCENARIO_ARGUMENT,
        CliArgument(("--case",), {"default": None, "help": "Preset case (1 or 2) replacing the scenario's parameters"}),
        OUT_ARGUMENT,
    ),
    help="Emit value function and concavification polylines as CSV",
    tables=(("points", "out"),),
)

simulate_spec = EndpointSpec(
    path=None,
    handler=simulate,
    required_params=[],
    response_model=None,
    request_model=SimulateRequest,
    command="simulate",
    cli_arguments=(
        SCENARIO_ARGUMENT,
        QUICK_ARGUMENT,
        CliArgument(
            ("--record-paths",),
            {"action": "store_true", "dest": "record_paths", "help": "Emit one CSV row per simulated path"},
        ),
        OUT_ARGUMENT,
    ),
    help="Simulate the scenario's solution and check it against the static prediction",
    tables=(("paths", "out"),),
)

API_SPEC = (root_spec, solve_spec, sweep_spec, verify_spec, figure_spec, simulate_spec)
