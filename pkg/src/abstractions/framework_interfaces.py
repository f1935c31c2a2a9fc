"""
framework_interfaces.py

Abstract interfaces defining how the application is exposed to its callers.

This module contains the abstract base class that every front end adapter implements.
The same endpoint specifications feed every adapter, so the command line and the HTTP
service always offer the same operations.

Classes:
    AppInterface: Interface for application adapters (e.g., FastAPI, argparse)

Features:
    - Framework-agnostic application interface
    - Factory method for bulk route creation from endpoint specifications
    - Input validation and error handling contracts

Usage Example:
    class MyAppFramework(AppInterface):
        def add_route(self, spec):
            ...

        def add_router(self, router):
            ...

        def run_application(self, *args, **kwargs):
            ...
"""

from abc import ABC, abstractmethod
from collections.abc import Iterable
from typing import TYPE_CHECKING, Any

from typing_extensions import Self

if TYPE_CHECKING:
    from src.models.specs_schemas import EndpointSpec


class AppInterface(ABC):
    """
    Abstract base class defining the contract for an application adapter.

    Implementing classes register endpoint specifications on an underlying framework
    object (a FastAPI app, an argparse parser) and know how to run it.
    """

    def __init__(self, app_instance: Any) -> None:
        """
        Args:
            app_instance: The underlying application object (e.g., FastAPI instance, ArgumentParser)
        """
        self._app = app_instance

    def get_app(self) -> Any:
        """
        Return the underlying application instance, for integration and testing.
        """
        return self._app

    @abstractmethod
    def add_route(self, spec: "EndpointSpec") -> None:
        """
        Register one endpoint specification. Adapters skip specifications that do not
        target them (no path for HTTP, no command for the command line).

        Raises:
            ValueError: If the specification is invalid for this adapter
        """
        raise NotImplementedError

    @abstractmethod
    def add_router(self, router: Any) -> None:
        """
        Add a group of routes to the application.
        """
        raise NotImplementedError

    @abstractmethod
    def run_application(self, *args: Any, **kwargs: Any) -> Any:
        """
        Start the application: serve requests or parse and execute one command.
        """
        raise NotImplementedError

    @classmethod
    def from_constructor(
        cls,
        app_type: type[Any],
        title: str,
        version: str,
        api_spec: Iterable["EndpointSpec"],
    ) -> Self:
        """
        Create an adapter and register every specification on it.

        Args:
            app_type: The framework class to instantiate
            title: Title of the application
            version: Version of the application
            api_spec: Endpoint specifications

        Returns:
            The configured adapter
        """
        framework = cls(app_type, title, version)  # type: ignore[call-arg]
        for spec in api_spec:
            framework.add_route(spec)
        return framework
