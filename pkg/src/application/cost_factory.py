"""
cost_factory.py

Turns a serializable cost specification into a cost object anchored at a prior.
"""

from src.abstractions import CostFunctionInterface
from src.application.settings import SETTINGS
from src.costs import EntropyCost, FlowCost, LogLikelihoodCost, TsallisCost, VarianceCost, make_flow
from src.models import CostSpec, EntropySpec, FlowSpec, LogLikelihoodSpec, TsallisSpec, VarianceSpec


def build_cost(spec: CostSpec, prior: float, sigma: float = 1.0) -> CostFunctionInterface:
    """
    Args:
        spec: Cost block of a scenario or request.
        prior: Anchoring prior of the solving agent.
        sigma: Observation noise; only flow costs depend on it.
    """
    match spec:
        case VarianceSpec(kappa=kappa):
            return VarianceCost(kappa, prior)
        case EntropySpec():
            return EntropyCost(prior)
        case LogLikelihoodSpec():
            return LogLikelihoodCost(prior)
        case TsallisSpec(kappa=kappa, q=q):
            return TsallisCost(kappa, q, prior)
        case FlowSpec(flow=name, coefficient=coefficient, kappa=kappa):
            flow = make_flow(name, sigma, coefficient, kappa)
            return FlowCost(flow, sigma, prior, SETTINGS.quadrature, name=name)
    raise TypeError(f"Unsupported cost specification {type(spec).__name__}")
