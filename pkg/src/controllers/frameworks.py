"""
frameworks.py

Framework Implementations

This module provides concrete implementations of the abstract interface defined in
framework_interfaces.py: one for the FastAPI web framework and one for the argparse
command line. Both register the same endpoint specifications.

Classes:
    FastApiFramework: FastAPI application wrapper; DomainError maps to 422, NumericError to 500
    ArgparseFramework: command-line application with one subcommand per specification

Exit codes of the command line:
    0 success, 1 failed verification, 2 input error, 3 numeric error

Dependencies:
    - fastapi: Web framework
    - uvicorn: ASGI server for running the application
    - src.abstractions: Abstract interfaces this module implements
"""

import json
import sys
from argparse import ArgumentParser, Namespace
from collections.abc import Awaitable, Callable, Iterable, Sequence
from typing import Any, Optional, TextIO

from fastapi import APIRouter, FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import ValidationError

from src.abstractions import AppInterface, DomainError, NumericError, VerificationFailure
from src.models import EndpointSpec
from src.utils import get_logger, write_table

logger = get_logger("cli.log")

VALID_METHODS = {"GET", "POST", "PUT", "DELETE", "PATCH", "HEAD", "OPTIONS", "TRACE"}


def _error_handler(status_code: int) -> Callable[[Request, Exception], Awaitable[JSONResponse]]:
    async def handler(request: Request, exc: Exception) -> JSONResponse:
        logger.error(f"{request.url.path} failed with {type(exc).__name__}: {exc}")
        return JSONResponse(
            status_code=status_code,
            content={"status_code": status_code, "message": str(exc), "content": {}},
        )

    return handler


class FastApiFramework(AppInterface):
    """
    A FastAPI application framework wrapper that implements AppInterface.

    Args:
        app_type: The FastAPI class to instantiate
        title: Title for the API documentation
        version: Version of the API

    Raises:
        TypeError: If app_type is not a FastAPI class
    """

    def __init__(self, app_type: type[FastAPI], title: str = "Test API", version: str = "1.0.0") -> None:
        if not isinstance(app_type, type) or not issubclass(app_type, FastAPI):
            raise TypeError(f"Expected FastAPI class, got {type(app_type).__name__}")

        app_instance = app_type(title=title, version=version)
        app_instance.add_exception_handler(DomainError, _error_handler(422))
        app_instance.add_exception_handler(NumericError, _error_handler(500))
        super().__init__(app_instance=app_instance)

    def add_route(self, spec: EndpointSpec, status_code: Optional[int] = 200) -> None:
        """
        Add the HTTP route of a specification. Command-line only specifications are skipped.

        Raises:
            ValueError: For invalid path, methods, or status code
        """
        if spec.path is None:
            return

        if not spec.path:
            raise ValueError("Path cannot be empty")

        if not spec.required_params:
            raise ValueError("Methods list cannot be empty")

        if spec.handler is None:
            raise ValueError("Endpoint function cannot be None")

        invalid_methods = set(spec.required_params) - VALID_METHODS
        if invalid_methods:
            raise ValueError(f"Invalid HTTP methods: {invalid_methods}")

        if status_code and (status_code < 100 or status_code >= 600):
            raise ValueError("Status code must be between 100 and 599")

        self._app.add_api_route(
            path=spec.path,
            endpoint=spec.handler,
            methods=list(spec.required_params),
            response_model=spec.response_model,
            status_code=status_code,
            summary=spec.help or None,
        )

    def add_router(self, router: APIRouter) -> None:
        if not isinstance(router, APIRouter):
            raise TypeError(f"Expected APIRouter, got {type(router).__name__}")
        self._app.include_router(router)

    def run_application(self, host: str = "127.0.0.1", port: int = 8000) -> None:
        """
        Run the FastAPI application using uvicorn server.

        Raises:
            ValueError: For invalid host or port
            ImportError: If uvicorn is not installed
        """
        if not host or not isinstance(host, str):
            raise ValueError("Host must be a non-empty string")

        if not isinstance(port, int) or port <= 0 or port > 65535:
            raise ValueError("Port must be an integer between 1 and 65535")

        try:
            import uvicorn
            uvicorn.run(self._app, host=host, port=port)
        except ImportError:
            raise ImportError(
                "uvicorn is required to run the application. "
                "Install it with: pip install uvicorn"
            )


class ArgparseFramework(AppInterface):
    """
    Command-line application: each specification with a `command` becomes a subcommand
    whose arguments build the specification's request model.

    Reports are printed to stdout as JSON. Content fields listed in a specification's
    `tables` are written as CSV, to the file named by their option or to stdout; in the
    latter case the rest of the report goes to the log.
    """

    def __init__(self, app_type: type[ArgumentParser] = ArgumentParser, title: str = "biased-evidence", version: str = "1.0.0") -> None:
        if not isinstance(app_type, type) or not issubclass(app_type, ArgumentParser):
            raise TypeError(f"Expected ArgumentParser class, got {type(app_type).__name__}")

        parser = app_type(prog=title, description="Costly evidence acquisition under belief and preference bias")
        parser.add_argument("--version", action="version", version=f"%(prog)s {version}")
        super().__init__(app_instance=parser)
        self._commands = parser.add_subparsers(dest="command", required=True)
        self._registered: set[str] = set()

    def add_route(self, spec: EndpointSpec) -> None:
        """
        Add the subcommand of a specification. HTTP only specifications are skipped.

        Raises:
            ValueError: For duplicated commands or a missing request model
        """
        if spec.command is None:
            return
        if spec.command in self._registered:
            raise ValueError(f"Command '{spec.command}' is already registered")
        if spec.request_model is None:
            raise ValueError(f"Command '{spec.command}' needs a request model")

        command = self._commands.add_parser(spec.command, help=spec.help, description=spec.help)
        for argument in spec.cli_arguments:
            command.add_argument(*argument.flags, **argument.options)
        command.set_defaults(endpoint_spec=spec)
        self._registered.add(spec.command)

    def add_router(self, router: Iterable[EndpointSpec]) -> None:
        for spec in router:
            self.add_route(spec)

    def run_application(self, argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None) -> int:
        """
        Parse `argv`, run the selected command and print its report.

        Returns:
            The exit code
        """
        stream = stdout or sys.stdout
        try:
            namespace = self._app.parse_args(argv)
        except SystemExit as exc:
            return exc.code if isinstance(exc.code, int) else 2

        spec: EndpointSpec = namespace.endpoint_spec
        try:
            request = spec.request_model.from_namespace(namespace)  # type: ignore[union-attr]
            response = spec.handler(request)
        except (ValidationError, DomainError, OSError) as exc:
            logger.error(f"{spec.command}: input error: {exc}")
            return 2
        except NumericError as exc:
            logger.error(f"{spec.command}: numeric error: {exc}")
            return 3

        self._emit(spec, namespace, response, stream)
        try:
            self._require_passed(response)
        except VerificationFailure as exc:
            logger.error(f"{spec.command}: {exc}")
            return 1
        return 0

    @staticmethod
    def _require_passed(response: dict[str, Any]) -> None:
        if response["content"].get("passed") is False:
            raise VerificationFailure(response["message"])

    @staticmethod
    def _emit(spec: EndpointSpec, namespace: Namespace, response: dict[str, Any], stream: TextIO) -> None:
        content = dict(response["content"])
        csv_on_stream = False
        for field, option in spec.tables:
            rows = content.pop(field, None)
            if not rows:
                continue
            destination = getattr(namespace, option, None)
            text = write_table(rows, destination)
            if destination is None:
                stream.write(text)
                csv_on_stream = True
            else:
                logger.info(f"Wrote {len(rows)} rows to {destination}")

        report = json.dumps({**response, "content": content}, indent=2)
        if csv_on_stream:
            logger.info(report)
        else:
            stream.write(report + "\n")
