"""
specs_schemas.py

This module defines structured schemas for endpoint specifications.
One specification configures both the HTTP route and the command-line
command of a handler, so both front ends stay in step.

Handlers are ControllerFunction callables: synchronous, taking at most their
request model and returning the response envelope.

Classes:
    CliArgument: One argparse argument (flags plus keyword options).
    EndpointSpec: Main specification class for endpoint configuration. A spec
        without `path` is command-line only; a spec without `command` is HTTP only.
        `tables` maps a content field holding rows to the command-line option naming
        its CSV destination.
"""

from typing import Any, NamedTuple, Optional

from src.abstractions import ControllerFunction
from .request_schemas import CommandRequest
from .response_schemas import (
    APIInfoResponse,
    FastApiPostResponse,
)


class CliArgument(NamedTuple):
    flags: tuple[str, ...]
    options: dict[str, Any]


class EndpointSpec(NamedTuple):
    """
    Endpoint specification formating class
    """
    path: Optional[str]
    handler: ControllerFunction
    required_params: list[str]
    response_model: Optional[type[FastApiPostResponse] | type[APIInfoResponse]]
    request_model: Optional[type[CommandRequest]] = None
    command: Optional[str] = None
    cli_arguments: tuple[CliArgument, ...] = ()
    help: str = ""
    tables: tuple[tuple[str, str], ...] = ()
