"""
response_schemas.py

Data schemas for response validation using Pydantic.

Includes:
- APIInfoResponse: Schema of the root endpoint.
- FastApiPostResponse: Envelope of every command response (status code, message, content).
"""

from typing import Any

from pydantic import BaseModel  # type: ignore


class APIInfoResponse(BaseModel):
    """Root endpoint body; `endpoints` maps each HTTP path to a one-line description."""

    message: str
    description: str
    version: str
    endpoints: dict[str, str]


class FastApiPostResponse(BaseModel):
    status_code: int
    message: str
    content: dict[str, Any]
