"""
controller_protocols.py

Call signature every controller function satisfies before a framework registers it.

Includes:
- ControllerFunction: runtime-checkable protocol of a synchronous controller. It takes
  at most one validated request model and returns the response envelope
  {"status_code", "message", "content"} (or plain API information for the root).
- protocol_checker: names the functions of a list that fail a protocol.

Controllers are synchronous: the command line calls them directly and FastAPI runs
them in its threadpool.
"""
import inspect
from collections.abc import Callable, Iterable
from typing import Any, Protocol, runtime_checkable


@runtime_checkable
class ControllerFunction(Protocol):
    def __call__(self, *args: Any, **kwargs: Any) -> dict[str, Any]:
        ...


def protocol_checker(
    fn_list: Iterable[Callable[..., Any]],
    protocol: type[ControllerFunction] = ControllerFunction,
) -> list[str]:
    """
    Names of the functions that are coroutines, take more than one parameter, or do
    not match `protocol`. An empty list means every function can be registered.
    """
    offending = []
    for fn in fn_list:
        name = getattr(fn, "__name__", repr(fn))
        if inspect.iscoroutinefunction(fn) or not isinstance(fn, protocol):
            offending.append(name)
        elif len(inspect.signature(fn).parameters) > 1:
            offending.append(name)
    return offending
