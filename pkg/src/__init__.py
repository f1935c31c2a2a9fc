"""
src
This source code contains the building blocks of the biased evidence acquisition service.
Here offer the elements that are essential for the main.py entry point.
"""

from .controllers import (
    API_SPEC,
    ArgparseFramework,
    FastApiFramework,
)
from .utils import setup_custom_logging

__all__ = [
    "API_SPEC",
    "ArgparseFramework",
    "FastApiFramework",
    "setup_custom_logging",
]
