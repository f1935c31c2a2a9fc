"""
cost_schemas.py

Serializable cost specifications, as they appear in scenario files and request
bodies. The "family" key selects the model; unknown keys are rejected.
"""

from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, PositiveFloat


class _CostBlock(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class VarianceSpec(_CostBlock):
    family: Literal["variance"]
    kappa: PositiveFloat


class EntropySpec(_CostBlock):
    family: Literal["entropy"]


class LogLikelihoodSpec(_CostBlock):
    family: Literal["log_likelihood"]


class TsallisSpec(_CostBlock):
    family: Literal["tsallis"]
    kappa: PositiveFloat = 1.0
    q: PositiveFloat


class FlowSpec(_CostBlock):
    """Static cost induced by a named flow cost; the coefficient defaults to the closed-form match."""
    family: Literal["flow"]
    flow: Literal["constant", "variance_proportional", "variance_squared"]
    coefficient: Optional[PositiveFloat] = None
    kappa: PositiveFloat = 1.0


CostSpec = Annotated[
    Union[VarianceSpec, EntropySpec, LogLikelihoodSpec, TsallisSpec, FlowSpec],
    Field(discriminator="family"),
]
