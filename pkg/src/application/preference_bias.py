"""
preference_bias.py

Preference-based bias: the investigator weighs its reward against the correctness of
the decision, and the decision-maker keeps the exogenous threshold a.

When the decision-maker's preferences bind, the optimal support is {b, a} and b is
the root of

    s(b) = phi(b) + (a - b) phi'(b) + (1 - eta) v + eta (a - rho (1 - a)) - phi(a),

which is the flat-reward residual with the effective reward of PreferenceShaped.
Binding holds exactly when b > 0, mu lies in (b, a) and -eta - phi'(b) >= eta rho - phi'(a).
"""

from collections.abc import Callable

import numpy as np

from src.abstractions import CostFunctionInterface, DomainError
from src.application.bias_analysis import outcome_probs
from src.application.persuasion_solver import solve_by_oracle, solve_foc_root, solve_static
from src.application.settings import SETTINGS
from src.models import (
    Assumption1Report,
    PreferenceParams,
    PreferenceSolution,
    Regime,
    StaticProblem,
    StaticsEntry,
    StaticsReport,
)
from src.utils import get_logger, one_sided_difference

logger = get_logger("preference.log")

STATICS_PARAMETERS = ("a", "v", "rho", "eta")


def preference_value(x: float, params: PreferenceParams, cost: CostFunctionInterface) -> float:
    """V(x) = -eta x - phi(x) below a and -eta rho (1 - x) + (1 - eta) v - phi(x) at or above a."""
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"Belief must lie in [0, 1], got {x}")
    payoff = params.shape.payoff(np.asarray(x, dtype=float), params.a)
    return float(payoff - cost.phi(x))


def preference_problem(params: PreferenceParams, mu: float, cost: CostFunctionInterface) -> StaticProblem:
    if not mu < params.a:
        raise DomainError(f"Threshold must exceed the prior: mu={mu}, a={params.a}")
    return StaticProblem(
        prior_effective=mu,
        threshold_effective=params.a,
        reward=params.v,
        cost=cost.reanchored(mu),
        upper_payoff_shape=params.shape,
    )


def check_assumption1(params: PreferenceParams, mu: float, cost: CostFunctionInterface, b: float) -> Assumption1Report:
    lhs = -params.eta - float(cost.phi_prime(b))
    rhs = params.eta * params.rho - float(cost.phi_prime(params.a))
    return Assumption1Report(
        b_positive=b > 0.0,
        prior_inside=b < mu < params.a,
        slope_condition=lhs >= rhs,
        slope_lhs=lhs,
        slope_rhs=rhs,
    )


def solve_preference(params: PreferenceParams, mu: float, cost: CostFunctionInterface) -> PreferenceSolution:
    """
    Binding solution when the binding conditions hold; otherwise the concavification
    oracle, flagged experimental, together with the failed conditions.
    """
    problem = preference_problem(params, mu, cost)
    b = solve_foc_root(problem)
    report = check_assumption1(params, mu, problem.cost, b)
    if report.holds:
        solution = solve_static(problem)
    else:
        logger.warning(f"Binding conditions fail ({', '.join(report.failed_clauses)}); using the oracle")
        solution = solve_by_oracle(problem)
    binding = report.holds and solution.regime is Regime.INTERIOR and not solution.at_lower_corner
    return PreferenceSolution(
        solution=solution,
        assumption=report,
        binding=binding,
        outcome=outcome_probs(solution, mu, mu, params.a),
    )


def residual_partials(params: PreferenceParams, cost: CostFunctionInterface, b: float) -> dict[str, float]:
    """Partial derivatives of s at a root b."""
    eta, rho, v, a = params.eta, params.rho, params.v, params.a
    phi_prime_b = float(cost.phi_prime(b))
    return {
        "b": (a - b) * float(cost.phi_double_prime(b)),
        "a": eta * (1.0 + rho) + phi_prime_b - float(cost.phi_prime(a)),
        "v": 1.0 - eta,
        "rho": -eta * (1.0 - a),
        "eta": a - rho * (1.0 - a) - v,
    }


def analytic_lambda_slopes(params: PreferenceParams, mu: float, b: float, partials: dict[str, float]) -> dict[str, float]:
    """Implicit-function slopes of lambda = (mu - b)(1 - a) / ((1 - mu)(a - b))."""
    a = params.a
    dlam_db = (1.0 - a) * (mu - a) / ((1.0 - mu) * (a - b) ** 2)
    dlam_da = -(mu - b) * (1.0 - b) / ((1.0 - mu) * (a - b) ** 2)
    slopes = {name: dlam_db * (-partials[name] / partials["b"]) for name in ("v", "rho", "eta")}
    slopes["a"] = dlam_da + dlam_db * (-partials["a"] / partials["b"])
    return slopes


def _with(params: PreferenceParams, name: str, value: float) -> PreferenceParams:
    return PreferenceParams(**{**params.model_dump(), name: value})


def _binding_lambda(params: PreferenceParams, mu: float, cost: CostFunctionInterface) -> float | None:
    result = solve_preference(params, mu, cost)
    return result.outcome.lambda_ if result.binding else None


LOWER_BOUNDS = {"rho": 0.0, "eta": 0.0}


def _numeric_slope(
    lam: Callable[[PreferenceParams], float | None],
    params: PreferenceParams,
    name: str,
) -> tuple[float, float]:
    step = SETTINGS.finite_differences.statics_step
    base = getattr(params, name)
    for _ in range(SETTINGS.finite_differences.statics_max_shrinks + 1):
        if base - step < LOWER_BOUNDS.get(name, -np.inf):
            values = {x: lam(_with(params, name, x)) for x in (base, base + 0.5 * step, base + step)}
            if None not in values.values():
                return one_sided_difference(lambda x: values[x], base, step), step
        else:
            upper = lam(_with(params, name, base + step))
            lower = lam(_with(params, name, base - step))
            if upper is not None and lower is not None:
                return (upper - lower) / (2.0 * step), step
        step /= SETTINGS.finite_differences.statics_shrink
    raise DomainError(f"Binding regime changes within {step:.1e} of {name}={base}")


def _expected_sign(name: str, partials: dict[str, float]) -> int:
    match name:
        case "a" | "rho":
            return -1
        case "v":
            return 1
        case _:
            return int(np.sign(partials["eta"]))


def preference_statics(
    params: PreferenceParams,
    mu: float,
    cost: CostFunctionInterface,
    a_decrement: float = 0.02,
) -> StaticsReport:
    """
    Numeric central-difference slopes of lambda in a, v, rho and eta against their
    implicit-function values and expected signs, plus the check that lowering the
    threshold by a_decrement raises lambda.

    Raises:
        DomainError: If the evaluation point is not binding, or the regime changes
            inside every stencil tried.
    """
    base = solve_preference(params, mu, cost)
    if not base.binding:
        raise DomainError(
            f"Statics need a binding interior solution; failed: {', '.join(base.assumption.failed_clauses) or 'regime'}"
        )
    anchored = cost.reanchored(mu)
    b = base.solution.low_posterior
    partials = residual_partials(params, anchored, b)
    analytic = analytic_lambda_slopes(params, mu, b, partials)

    def lam(point: PreferenceParams) -> float | None:
        return _binding_lambda(point, mu, cost)

    entries = []
    for name in STATICS_PARAMETERS:
        numeric, step = _numeric_slope(lam, params, name)
        entries.append(
            StaticsEntry(
                parameter=name,
                numeric_slope=numeric,
                analytic_slope=analytic[name],
                expected_sign=_expected_sign(name, partials),
                weak=name == "rho" and params.eta == 0.0,
                step=step,
            )
        )

    lowered = solve_preference(_with(params, "a", params.a - a_decrement), mu, cost)
    report = StaticsReport(
        eta=params.eta,
        rho=params.rho,
        v=params.v,
        a=params.a,
        entries=entries,
        residual_partials=partials,
        bias_raises_lambda=lowered.outcome.lambda_ > base.outcome.lambda_,
    )
    logger.info(f"Statics at eta={params.eta}, rho={params.rho}, v={params.v}: passed={report.passed}")
    return report
