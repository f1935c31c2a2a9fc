from typing import Literal

from pydantic import BaseModel, ConfigDict

FigureSeries = Literal["perceived_V", "perceived_concavification", "actual_V", "actual_concavification"]


class FigurePoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    series: FigureSeries
    x: float
    y: float


class FigureMetadata(BaseModel):
    """Low posterior of the biased investigator as the unbiased decision-maker reads it, against the unbiased one."""
    model_config = ConfigDict(frozen=True)

    mu: float
    mu_L: float
    a: float
    a_L: float
    d: float
    b_L: float
    x_DM_of_b_L: float
    b_unbiased: float
    x_DM_of_b_L_exceeds_b: bool


class FigureData(BaseModel):
    model_config = ConfigDict(frozen=True)

    points: list[FigurePoint]
    metadata: FigureMetadata
