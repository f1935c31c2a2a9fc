"""
request_schemas.py

Request bodies shared by the HTTP endpoints and the command-line commands.

Includes:
- CommandRequest: base with `from_namespace`, which builds a request from parsed
  command-line arguments (scenario paths are read and validated here).
- SolveRequest, SweepRequest, VerifyRequest, FigureRequest, SimulateRequest.
"""

from argparse import Namespace
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict
from typing_extensions import Self

from .scenario_schemas import ScenarioFile


class CommandRequest(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    @classmethod
    def from_namespace(cls, namespace: Namespace) -> Self:
        """
        Raises:
            OSError: If a scenario path cannot be read.
            ValidationError: If the arguments or the scenario file are invalid.
        """
        given = vars(namespace)
        fields = {name: given[name] for name in cls.model_fields if name in given and given[name] is not None}
        if "scenario" in fields:
            fields["scenario"] = ScenarioFile.from_path(fields["scenario"])
        return cls.model_validate(fields)


class SolveRequest(CommandRequest):
    scenario: ScenarioFile


class SweepRequest(CommandRequest):
    scenario: ScenarioFile
    grid: str
    who: Optional[Literal["L", "DM"]] = None
    include_boundaries: bool = False


class VerifyRequest(CommandRequest):
    suite: str = "all"
    quick: bool = False


class FigureRequest(CommandRequest):
    scenario: ScenarioFile
    case: Optional[str] = None


class SimulateRequest(CommandRequest):
    scenario: ScenarioFile
    quick: bool = False
    record_paths: bool = False
