"""
bias_analysis.py

Outcome statistics and threshold constants of the belief-bias model, plus the
routines that compare a biased investigator (L) with a biased decision-maker (DM).

Wiring of a bias sweep point mu_B:
    L biased:  prior mu_B, threshold a_L(mu, mu_B, a), cost anchored at mu_B.
    DM biased: prior mu,   threshold a_DM(mu, mu_B, a), cost anchored at mu.
Conditional conviction rates do not depend on the prior, so the rates computed
under L's subjective prior are also the true ones.
"""

import math
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import Literal, Optional

import numpy as np
from scipy.optimize import bisect  # type: ignore
from tqdm import tqdm

from src.abstractions import BiasedEvidenceError, CostFunctionInterface, DomainError, NumericError
from src.application.belief_geometry import (
    effective_threshold_biased_DM,
    effective_threshold_biased_L,
)
from src.application.cost_factory import build_cost
from src.application.persuasion_solver import solve_static
from src.application.settings import SETTINGS
from src.costs import VarianceCost
from src.models import (
    Lemma1Class,
    Lemma1Verdict,
    OutcomeProbs,
    Prop3Result,
    Regime,
    ScenarioFile,
    StaticProblem,
    StaticSolution,
    SweepRow,
    Theorem1Class,
    Theorem1Verdict,
    Theorem2Result,
    ThresholdBundle,
)
from src.utils import central_difference, get_logger, one_sided_difference, worker_count

logger = get_logger("analysis.log")

Who = Literal["L", "DM"]


def outcome_probs(
    solution: StaticSolution,
    mu_true: float,
    mu_subjective: float,
    threshold_effective: float,
) -> OutcomeProbs:
    """
    Conviction rates of a solution: the defendant is convicted at every posterior at or
    above the effective threshold.
    """
    tolerance = SETTINGS.tolerances.belief_equality
    if solution.regime is Regime.INTERIOR:
        atoms = list(zip(solution.support, solution.support_weights))
    else:
        atoms = [(solution.prior, 1.0)]
    gamma = 0.0
    lam = 0.0
    for x, weight in atoms:
        if weight > 0.0 and x >= threshold_effective - tolerance:
            gamma += weight * x / mu_subjective
            lam += weight * (1.0 - x) / (1.0 - mu_subjective)
    gamma, lam = min(gamma, 1.0), min(lam, 1.0)
    return OutcomeProbs(
        gamma=gamma,
        lambda_=lam,
        p_true=mu_true * gamma + (1.0 - mu_true) * lam,
        p_subjective=solution.conviction_prob,
    )


def min_reward_ratio(mu: float, mu_L: float, a: float) -> float:
    """Minimal reward ratio for investigation under the variance cost, a_L - mu_L."""
    return effective_threshold_biased_L(mu, mu_L, a) - mu_L


def lemma1_t(mu: float, a: float, mu_L: float) -> float:
    """Same sign as the slope of the minimal reward ratio in mu_L."""
    return (1.0 - a) * mu * (1.0 - 2.0 * mu_L) - (a - mu) * mu_L**2


def lemma1_classify(mu: float, a: float) -> Lemma1Verdict:
    if not mu < a:
        raise DomainError(f"Reward ratio classification requires mu < a, got mu={mu}, a={a}")
    if 1.0 <= mu + a:
        return Lemma1Verdict(classification=Lemma1Class.ALWAYS_DECREASING)
    discriminant = (1.0 - a) ** 2 * mu**2 + (a - mu) * (1.0 - a) * mu
    dagger = (-(1.0 - a) * mu + math.sqrt(discriminant)) / (a - mu)
    return Lemma1Verdict(classification=Lemma1Class.INCREASING_NEAR_PRIOR, mu_L_dagger=dagger)


def theorem1_f(mu: float, a: float, d: float, mu_L: float) -> float:
    """Same sign as the slope of lambda in mu_L under the variance cost."""
    return ((d - 2.0 * a + 1.0) * mu - a * d + a) * mu_L + (a - 1.0) * (d + 1.0) * mu


def variance_lambda_biased_L(mu: float, mu_L: float, a: float, d: float) -> float:
    """Closed-form wrongful conviction rate of a biased investigator under the variance cost."""
    a_l = effective_threshold_biased_L(mu, mu_L, a)
    if mu_L >= a_l:
        return 1.0
    p = min(max((mu_L + d - a_l) / d, 0.0), 1.0)
    return (1.0 - a_l) / (1.0 - mu_L) * p


def theorem1_classify(mu: float, a: float, d: float) -> Theorem1Verdict:
    """
    Whether a mild investigator bias lowers wrongful convictions under the variance cost.
    The no-investigation baseline (mu <= a - d) takes precedence.
    """
    if a <= d:
        raise DomainError(f"Condition 1 violated: a_DM <= d (a_DM={a:.6g}, d={d:.6g})")
    if mu <= a - d:
        return Theorem1Verdict(classification=Theorem1Class.NO_INVESTIGATION_BASELINE)
    if 2.0 * a - d < 1.0:
        slope = (d - 2.0 * a + 1.0) * mu - a * d + a
        minimizer = -(a - 1.0) * (d + 1.0) * mu / slope
        return Theorem1Verdict(classification=Theorem1Class.BIAS_BENEFICIAL_NEAR_PRIOR, lambda_minimizer=minimizer)
    return Theorem1Verdict(classification=Theorem1Class.BIAS_HARMFUL)


def abar(mu: float) -> float:
    return (1.0 + math.sqrt(1.0 - 2.0 * mu + 2.0 * mu**2)) / 2.0


def dbar(mu: float, a: float) -> float:
    return (4.0 * a**2 - 3.0 * a * mu - 2.0 * a + mu) / (2.0 * a - mu)


def v_epsilon(cost: CostFunctionInterface, mu: float, a: float) -> float:
    """Minimal reward for an interior solution without bias: the residual vanishes at b = mu."""
    return cost.bregman_gap(a, mu)


def threshold_bundle(mu: float, a: float, d: float, mu_L: float, v: float) -> ThresholdBundle:
    """Threshold quantities of the variance cost whose kappa gives d = sqrt(v / kappa)."""
    if d <= 0.0 or v <= 0.0:
        raise DomainError(f"Threshold bundle needs d > 0 and v > 0, got d={d}, v={v}")
    lemma = lemma1_classify(mu, a)
    prop3 = prop3_threshold(mu, a, d) if a - d < mu else None
    return ThresholdBundle(
        ubar_d=min_reward_ratio(mu, mu_L, a),
        dbar=dbar(mu, a),
        abar=abar(mu),
        mu_L_dagger=lemma.mu_L_dagger,
        v_epsilon=v_epsilon(VarianceCost(v / d**2, mu), mu, a),
        mu_B_diamond=prop3.mu_B_diamond if prop3 else None,
    )


def biased_problem(
    who: Who,
    mu: float,
    mu_B: float,
    a: float,
    v: float,
    cost: CostFunctionInterface,
) -> tuple[StaticProblem, float]:
    """Static problem of the evidence gatherer and the prior under which it is solved."""
    if who == "L":
        threshold = effective_threshold_biased_L(mu, mu_B, a)
        subjective = mu_B
    else:
        threshold = effective_threshold_biased_DM(mu, mu_B, a)
        subjective = mu
    problem = StaticProblem(
        prior_effective=subjective,
        threshold_effective=threshold,
        reward=v,
        cost=cost.reanchored(subjective),
    )
    return problem, subjective


def biased_outcome(
    who: Who,
    mu: float,
    mu_B: float,
    a: float,
    v: float,
    cost: CostFunctionInterface,
) -> tuple[StaticSolution, OutcomeProbs]:
    problem, subjective = biased_problem(who, mu, mu_B, a, v, cost)
    solution = solve_static(problem)
    return solution, outcome_probs(solution, mu, subjective, problem.threshold_effective)


def biased_lambda(who: Who, mu: float, mu_B: float, a: float, v: float, cost: CostFunctionInterface) -> float:
    return biased_outcome(who, mu, mu_B, a, v, cost)[1].lambda_


def _sweep_row(scenario: ScenarioFile, who: Who, mu_B: float) -> SweepRow:
    try:
        cost = build_cost(scenario.cost, mu_B if who == "L" else scenario.mu, scenario.sigma)
        solution, outcome = biased_outcome(who, scenario.mu, mu_B, scenario.a, scenario.v, cost)
    except BiasedEvidenceError as exc:
        exc.add_note(f"while solving sweep point mu_B={mu_B:.12g} (who={who})")
        raise
    return SweepRow(
        mu_B=mu_B,
        who=who,
        regime=solution.regime,
        b=solution.low_posterior,
        high=solution.high_posterior,
        p_subjective=outcome.p_subjective,
        gamma=outcome.gamma,
        lambda_=outcome.lambda_,
        p_true=outcome.p_true,
    )


def _regime_boundary(scenario: ScenarioFile, who: Who, left: float, right: float) -> float:
    """Bisect on the regime label between two grid points with different regimes."""
    left_regime = _sweep_row(scenario, who, left).regime
    while right - left > SETTINGS.analysis.boundary_xtol:
        middle = 0.5 * (left + right)
        if _sweep_row(scenario, who, middle).regime == left_regime:
            left = middle
        else:
            right = middle
    return 0.5 * (left + right)


def sweep_bias(
    scenario: ScenarioFile,
    who: Who,
    grid: Sequence[float],
    include_boundaries: bool = False,
    show_progress: bool = False,
) -> list[SweepRow]:
    """
    Solve every grid point in parallel and return rows in grid order.

    With include_boundaries, each regime change between adjacent points adds the two
    one-sided solutions at the bisected boundary.
    """
    points = [float(x) for x in grid]
    if not points:
        raise DomainError("Sweep grid is empty")
    if any(x < scenario.mu - SETTINGS.tolerances.belief_equality or x >= 1.0 for x in points):
        raise DomainError(f"Sweep grid must lie within [mu, 1) = [{scenario.mu}, 1)")

    with ThreadPoolExecutor(max_workers=worker_count()) as pool:
        rows = list(
            tqdm(
                pool.map(lambda x: _sweep_row(scenario, who, x), points),
                total=len(points),
                desc=f"sweep {who}",
                disable=not show_progress,
            )
        )
    logger.info(f"Swept {len(points)} points for who={who}")
    if not include_boundaries:
        return rows

    offset = SETTINGS.analysis.boundary_offset
    augmented: list[SweepRow] = [rows[0]]
    for previous, current in zip(rows, rows[1:]):
        if previous.regime != current.regime:
            boundary = _regime_boundary(scenario, who, previous.mu_B, current.mu_B)
            logger.info(f"Regime change {previous.regime.value} -> {current.regime.value} at mu_B={boundary:.10g}")
            augmented.append(_sweep_row(scenario, who, boundary - offset))
            augmented.append(_sweep_row(scenario, who, boundary + offset))
        augmented.append(current)
    return augmented


def prop3_quartic(mu: float, a: float, d: float, mu_B: float) -> float:
    """Same sign as lambda - lambda_hat under the variance cost while both solutions are interior."""
    first = (
        mu_B
        * ((mu - a) * mu_B + (a - 1.0) * mu) ** 2
        * ((mu**2 + (d - 1.0) * mu + (a - 1.0) * d) * mu_B - a * mu**2 + (a - a * d) * mu)
    )
    second = (
        mu
        * ((mu + a - 1.0) * mu_B - a * mu) ** 2
        * ((mu - a) * mu_B**2 + (d - 1.0) * (mu - a) * mu_B + (a - 1.0) * d * mu)
    )
    return first - second


def _lambda_gap(mu: float, a: float, v: float, cost: VarianceCost, mu_B: float) -> float:
    return biased_lambda("L", mu, mu_B, a, v, cost) - biased_lambda("DM", mu, mu_B, a, v, cost)


def prop3_threshold(mu: float, a: float, d: float) -> Prop3Result:
    """
    False prior beyond which a biased decision-maker convicts innocents more often than
    an equally biased investigator, under the variance cost. It exists only when
    a > abar(mu) and a - mu < d < dbar(mu, a). Where the decision-maker's threshold
    falls to d or below, the corner solution b = 0 supplies lambda_hat.
    """
    if not a - d < mu < a:
        raise DomainError(f"Threshold false prior requires a - d < mu < a, got mu={mu}, a={a}, d={d}")
    a_bar, d_bar = abar(mu), dbar(mu, a)
    v = 1.0
    cost = VarianceCost(v / d**2, mu)
    applicable = a > a_bar and a - mu < d < d_bar

    scan = np.linspace(mu, a, SETTINGS.analysis.prop3_scan_points + 2)[1:-1]
    gaps = np.array([_lambda_gap(mu, a, v, cost, float(x)) for x in scan])
    signs = np.sign(gaps)
    changes = [k for k in range(len(scan) - 1) if signs[k] > 0.0 and signs[k + 1] < 0.0]
    all_changes = int(np.count_nonzero(np.diff(signs[signs != 0.0])))

    if not applicable:
        weakly = bool(np.all(gaps <= SETTINGS.tolerances.bayes_plausibility))
        return Prop3Result(abar=a_bar, dbar=d_bar, applicable=False, sign_changes=all_changes,
                           investigator_bias_weakly_preferred=weakly)
    if not changes:
        raise NumericError(f"No sign change of lambda - lambda_hat found on ({mu}, {a})")
    if all_changes > 1:
        logger.warning(f"lambda - lambda_hat changes sign {all_changes} times; reporting the first crossing")

    k = changes[0]
    root = float(
        bisect(
            lambda x: _lambda_gap(mu, a, v, cost, x),
            float(scan[k]),
            float(scan[k + 1]),
            xtol=SETTINGS.analysis.prop3_xtol,
        )
    )
    window = 1e-3
    quartic_left = prop3_quartic(mu, a, d, max(root - window, mu + 1e-12))
    quartic_right = prop3_quartic(mu, a, d, min(root + window, a))
    agrees = bool(quartic_left > 0.0 > quartic_right)
    if not agrees:
        logger.warning(f"Quartic cross-check does not bracket mu_B={root:.10g}; the solver root stands")
    logger.info(f"Threshold false prior mu_B={root:.10g} for mu={mu}, a={a}, d={d}")
    return Prop3Result(abar=a_bar, dbar=d_bar, applicable=True, mu_B_diamond=root,
                       sign_changes=all_changes, quartic_agrees=agrees)


def theorem2_q(cost: CostFunctionInterface, mu: float, a: float) -> float:
    """q(a) = 2 (1 - a) a (phi'(a) - phi'(mu)) / ((a - mu) mu (1 - mu) phi''(mu))."""
    numerator = 2.0 * (1.0 - a) * a * (float(cost.phi_prime(a)) - float(cost.phi_prime(mu)))
    return numerator / ((a - mu) * mu * (1.0 - mu) * float(cost.phi_double_prime(mu)))


def _theorem2_slopes(cost: CostFunctionInterface, mu: float, a: float, v: float) -> tuple[float, float]:
    step = SETTINGS.finite_differences.step
    slope_l = one_sided_difference(lambda x: biased_lambda("L", mu, x, a, v, cost), mu, step)
    slope_dm = one_sided_difference(lambda x: biased_lambda("DM", mu, x, a, v, cost), mu, step)
    return slope_l, slope_dm


def theorem2_compare(
    cost: CostFunctionInterface,
    mu: float,
    epsilon: float,
    v: Optional[float] = None,
    scan_rewards: bool = False,
) -> Theorem2Result:
    """
    Slopes of lambda (biased investigator) and lambda_hat (biased decision-maker) at no
    bias for a threshold a = 1 - epsilon, with the analytic q(a). At v just above
    v_epsilon the investigator's slope exceeds the decision-maker's iff 1 - q(a) > 0.

    Raises:
        DomainError: If v <= v_epsilon.
    """
    a = 1.0 - epsilon
    anchored = cost.reanchored(mu)
    v_eps = v_epsilon(anchored, mu, a)
    v = v_eps * SETTINGS.analysis.theorem2_reward_factor if v is None else v
    if v <= v_eps:
        raise DomainError(f"Reward v={v:.6g} must exceed v_epsilon={v_eps:.6g}")

    slope_l, slope_dm = _theorem2_slopes(anchored, mu, a, v)
    q = theorem2_q(anchored, mu, a)
    largest: Optional[float] = None
    if scan_rewards:
        for factor in SETTINGS.analysis.theorem2_scan_factors:
            scanned_l, scanned_dm = _theorem2_slopes(anchored, mu, a, v_eps * factor)
            if scanned_l > scanned_dm:
                largest = v_eps * factor
    return Theorem2Result(
        family=anchored.family,
        mu=mu,
        a=a,
        v_epsilon=v_eps,
        v=v,
        lambda_slope_L=slope_l,
        lambda_slope_DM=slope_dm,
        q_value=q,
        one_minus_q=1.0 - q,
        slopes_match_q=(slope_l > slope_dm) == (1.0 - q > 0.0),
        largest_checked_reward=largest,
    )


def implicit_low_posterior_claims(
    cost: CostFunctionInterface,
    mu: float,
    a: float,
    v: float,
    mu_B: float,
) -> dict[str, float]:
    """
    Numeric slopes of the low posterior: b_L in mu_L and v, b_DM in mu_DM and v.
    Expected signs: +, -, -, -.
    """
    fd = SETTINGS.finite_differences

    def low(who: Who, bias: float, reward: float) -> float:
        solution, _ = biased_outcome(who, mu, bias, a, reward, cost)
        if solution.regime is not Regime.INTERIOR:
            raise DomainError(f"Low posterior slope needs an interior solution (who={who}, mu_B={bias})")
        return solution.low_posterior

    def slope(fn: Callable[[float], float], x: float) -> float:
        return central_difference(fn, x, fd.step, fd.richardson_step, fd.disagreement)

    return {
        "b_L/mu_L": slope(lambda x: low("L", x, v), mu_B),
        "b_L/v": slope(lambda x: low("L", mu_B, x), v),
        "b_DM/mu_DM": slope(lambda x: low("DM", x, v), mu_B),
        "b_DM/v": slope(lambda x: low("DM", mu_B, x), v),
    }
