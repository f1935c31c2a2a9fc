"""
belief_schemas.py

Constrained float types for beliefs. Beliefs are plain probabilities.
"""

from typing import Annotated

from pydantic import Field

Belief = Annotated[float, Field(ge=0.0, le=1.0, allow_inf_nan=False)]
InteriorBelief = Annotated[float, Field(gt=0.0, lt=1.0, allow_inf_nan=False)]
ThresholdBelief = Annotated[float, Field(gt=0.0, le=1.0, allow_inf_nan=False)]
Reward = Annotated[float, Field(gt=0.0, allow_inf_nan=False)]
