"""
costs
Concrete cost families implementing CostFunctionInterface, plus the named flow costs
that induce them through the dynamic sampling problem.
"""

from .flow_families import FLOW_FAMILIES, FlowName, default_coefficient, make_flow
from .implementations import EntropyCost, FlowCost, LogLikelihoodCost, TsallisCost, VarianceCost

__all__ = [
    "EntropyCost",
    "FlowCost",
    "FlowName",
    "FLOW_FAMILIES",
    "LogLikelihoodCost",
    "TsallisCost",
    "VarianceCost",
    "default_coefficient",
    "make_flow",
]
