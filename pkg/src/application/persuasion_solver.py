"""
persuasion_solver.py

Static costly persuasion: choose a Bayes-plausible distribution over posteriors to
maximize the probability-weighted reward of conviction net of the information cost.

Because the cost is strictly convex and the payoff jumps once, the optimum is either
degenerate at the prior or binary with support {b, threshold}. The low posterior b
is the unique root of the first order residual

    h(b) = phi(b) + (t - b) phi'(b) + v_eff - phi(t),

strictly increasing on the bracket because dh/db = (t - b) phi''(b) > 0. Under the
preference-shaped payoff v_eff absorbs the preference terms, so the same residual
covers both payoff shapes. A grid concavification oracle cross-checks the solver.
"""

import numpy as np
from numpy.typing import NDArray
from scipy.optimize import brentq  # type: ignore

from src.abstractions import DivergenceError, DomainError, NumericError
from src.application.settings import SETTINGS
from src.models import OracleResult, Regime, StaticProblem, StaticSolution
from src.utils import get_logger

logger = get_logger("solver.log")


def foc_residual_h(b: float, problem: StaticProblem) -> float:
    """First order residual at candidate low posterior b."""
    cost = problem.cost
    t = problem.threshold_effective
    v_eff = problem.shape.effective_reward(t)
    try:
        return float(cost.phi(b) + (t - b) * cost.phi_prime(b) + v_eff - cost.phi(t))
    except DivergenceError as exc:
        raise NumericError(f"First order residual diverges at b={b:.6g}: {exc}") from exc


def lower_limit(problem: StaticProblem) -> float:
    """Lowest belief at which the residual is evaluated."""
    cost = problem.cost
    floor = SETTINGS.solver.divergent_floor if cost.diverges_at_endpoints else 0.0
    return max(cost.domain[0], floor)


def _degenerate(problem: StaticProblem, regime: Regime) -> StaticSolution:
    mu = problem.prior_effective
    return StaticSolution(
        regime=regime,
        prior=mu,
        low_posterior=mu,
        high_posterior=mu,
        conviction_prob=1.0 if regime is Regime.FREE_CONVICTION else 0.0,
    )


def _binary(problem: StaticProblem, b: float, at_lower_corner: bool = False) -> StaticSolution:
    mu, t = problem.prior_effective, problem.threshold_effective
    p = (mu - b) / (t - b)
    solution = StaticSolution(
        regime=Regime.INTERIOR,
        prior=mu,
        low_posterior=b,
        high_posterior=t,
        conviction_prob=p,
        at_lower_corner=at_lower_corner,
    )
    mean = (1.0 - p) * b + p * t
    if abs(mean - mu) > SETTINGS.tolerances.bayes_plausibility:
        raise NumericError(f"Solution is not Bayes-plausible: mean {mean:.15g} against prior {mu:.15g}")
    return solution


def solution_value(problem: StaticProblem, solution: StaticSolution) -> float:
    """Expected perceived value of a solution's distribution over posteriors."""
    low_weight, high_weight = solution.support_weights
    values = problem.value(np.array([solution.low_posterior, solution.high_posterior]))
    return float(low_weight * values[0] + high_weight * values[1])


def _assert_single_crossing(problem: StaticProblem, lo: float, hi: float) -> None:
    samples = np.linspace(lo, hi, SETTINGS.solver.uniqueness_samples)
    signs = np.sign([foc_residual_h(float(x), problem) for x in samples])
    signs = signs[signs != 0.0]
    changes = int(np.count_nonzero(np.diff(signs)))
    if changes > 1:
        raise NumericError(f"First order residual changes sign {changes} times on [{lo:.6g}, {hi:.6g}]")


def _polish(problem: StaticProblem, b: float, lo: float, hi: float) -> float:
    """One safeguarded Newton step; kept only if it stays in the bracket and lowers |h|."""
    t = problem.threshold_effective
    try:
        slope = (t - b) * float(problem.cost.phi_double_prime(b))
    except DivergenceError:
        return b
    if not slope > 0.0:
        return b
    candidate = b - foc_residual_h(b, problem) / slope
    if lo <= candidate <= hi and abs(foc_residual_h(candidate, problem)) < abs(foc_residual_h(b, problem)):
        return candidate
    return b


def solve_foc_root(problem: StaticProblem) -> float:
    """
    Root of the residual on [lower limit, threshold), or the lower limit when the
    residual is already nonnegative there. Ignores regime logic.
    """
    lo = lower_limit(problem)
    hi = problem.threshold_effective
    if hi >= 1.0:
        hi = 1.0 - SETTINGS.solver.divergent_floor if problem.cost.diverges_at_endpoints else hi
    if foc_residual_h(lo, problem) >= 0.0:
        return lo
    root, result = brentq(
        foc_residual_h,
        lo,
        hi,
        args=(problem,),
        xtol=SETTINGS.solver.xtol,
        maxiter=SETTINGS.solver.max_iterations,
        full_output=True,
        disp=False,
    )
    if not result.converged:
        raise NumericError(f"Bracketed root search did not converge: {result.flag}", abs(hi - lo))
    return _polish(problem, float(root), lo, hi)


def solve_static(problem: StaticProblem) -> StaticSolution:
    """
    Optimal distribution over posteriors for a static problem.

    Raises:
        DomainError: Threshold 1 with a bounded cost for which certainty is affordable.
        NumericError: Divergent evaluations, multiple residual roots or failed brackets.
    """
    mu, t = problem.prior_effective, problem.threshold_effective
    cost = problem.cost
    tolerance = SETTINGS.tolerances.belief_equality

    if mu >= t - tolerance:
        logger.info(f"Prior {mu:.6g} already meets threshold {t:.6g}: free conviction")
        return _degenerate(problem, Regime.FREE_CONVICTION)

    if t >= 1.0 - tolerance:
        if cost.diverges_at_endpoints:
            logger.info(f"Threshold 1 with {cost.family} cost: certainty unreachable, no acquisition")
            return _degenerate(problem, Regime.NO_ACQUISITION)
        if not cost.certainty_prohibitively_costly(problem.shape.effective_reward(t), t):
            raise DomainError(
                f"Threshold 1 with {cost.family} cost requires certainty to be prohibitively costly at v={problem.reward}"
            )

    if foc_residual_h(mu, problem) <= 0.0:
        logger.info(f"Residual nonpositive at the prior {mu:.6g}: no acquisition")
        return _degenerate(problem, Regime.NO_ACQUISITION)

    lo = lower_limit(problem)
    if foc_residual_h(lo, problem) >= 0.0:
        logger.warning(f"Residual nonnegative at the lower limit {lo:.3g}: corner solution b={lo:.3g}")
        solution = _binary(problem, lo, at_lower_corner=True)
    else:
        _assert_single_crossing(problem, lo, mu)
        b = solve_foc_root(problem)
        if not lo <= b < mu:
            logger.info(f"Residual root {b:.6g} outside [{lo:.3g}, {mu:.6g}): no acquisition")
            return _degenerate(problem, Regime.NO_ACQUISITION)
        solution = _binary(problem, b)

    inactive = solution_value(problem, _degenerate(problem, Regime.NO_ACQUISITION))
    active = solution_value(problem, solution)
    if active <= inactive + SETTINGS.tolerances.value_dominance:
        logger.info(f"Interior value {active:.6g} does not beat no acquisition {inactive:.6g}")
        return _degenerate(problem, Regime.NO_ACQUISITION)
    return solution


def solve_variance_closed_form(
    mu_eff: float,
    a_eff: float,
    d: float,
    condition_threshold: float | None = None,
) -> StaticSolution:
    """
    Closed form under the variance cost: support {a_eff - d, a_eff} and
    p = (mu_eff + d - a_eff) / d.

    Args:
        mu_eff: Effective prior.
        a_eff: Effective threshold.
        d: Reward ratio sqrt(v / kappa).
        condition_threshold: a_DM of the ambient scenario; defaults to a_eff.

    Raises:
        DomainError: When a_DM <= d.
    """
    a_dm = a_eff if condition_threshold is None else condition_threshold
    if a_dm <= d:
        raise DomainError(f"Condition 1 violated: a_DM <= d (a_DM={a_dm:.6g}, d={d:.6g})")
    tolerance = SETTINGS.tolerances.belief_equality
    if mu_eff >= a_eff - tolerance:
        return StaticSolution(
            regime=Regime.FREE_CONVICTION, prior=mu_eff, low_posterior=mu_eff, high_posterior=mu_eff, conviction_prob=1.0
        )
    if mu_eff <= a_eff - d + tolerance:
        return StaticSolution(
            regime=Regime.NO_ACQUISITION, prior=mu_eff, low_posterior=mu_eff, high_posterior=mu_eff, conviction_prob=0.0
        )
    return StaticSolution(
        regime=Regime.INTERIOR,
        prior=mu_eff,
        low_posterior=a_eff - d,
        high_posterior=a_eff,
        conviction_prob=(mu_eff + d - a_eff) / d,
    )


def sample_value_function(problem: StaticProblem, step: float | None = None) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Uniform grid of (x, V(x)) over the cost's evaluation domain, with the threshold as a node."""
    step = SETTINGS.oracle.grid_step if step is None else step
    cost = problem.cost
    lo, hi = cost.domain
    if cost.diverges_at_endpoints:
        clip = SETTINGS.oracle.divergent_clip
        lo, hi = max(lo, clip), min(hi, 1.0 - clip)
    xs = np.arange(lo, hi + 0.5 * step, step)
    xs = xs[xs <= hi]
    t = problem.threshold_effective
    if lo <= t <= hi:
        xs = np.sort(np.concatenate([xs[np.abs(xs - t) > 1e-6 * step], [t]]))
    return xs, problem.value(xs)


def _upper_hull(xs: NDArray[np.float64], ys: NDArray[np.float64]) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    hull: list[int] = []
    for k in range(xs.size):
        while len(hull) >= 2:
            i, j = hull[-2], hull[-1]
            forward = (xs[j] - xs[i]) * (ys[k] - ys[i])
            backward = (ys[j] - ys[i]) * (xs[k] - xs[i])
            # collinear points stay on the hull
            if forward - backward <= 1e-12 * (abs(forward) + abs(backward)):
                break
            hull.pop()
        hull.append(k)
    return xs[hull], ys[hull]


def concavify_oracle(xs: NDArray[np.float64], values: NDArray[np.float64], prior: float) -> OracleResult:
    """
    Upper concave envelope of sampled values (monotone chain) and the envelope chord
    through the prior.

    Raises:
        DomainError: If the grid is not strictly increasing or does not contain the prior.
    """
    xs = np.asarray(xs, dtype=float)
    values = np.asarray(values, dtype=float)
    if xs.shape != values.shape or xs.size < 2:
        raise DomainError("Oracle needs matching grids with at least two points")
    if np.any(np.diff(xs) <= 0.0):
        raise DomainError("Oracle grid must be strictly increasing")
    if not xs[0] <= prior <= xs[-1]:
        raise DomainError(f"Prior {prior} lies outside the oracle grid [{xs[0]:.6g}, {xs[-1]:.6g}]")

    hull_x, hull_y = _upper_hull(xs, values)
    vertex = np.flatnonzero(np.abs(hull_x - prior) <= SETTINGS.tolerances.belief_equality)
    if vertex.size:
        k = int(vertex[0])
        return OracleResult(hull_x, hull_y, float(hull_x[k]), float(hull_x[k]), 0.0, float(hull_y[k]))

    right = int(np.searchsorted(hull_x, prior))
    left = right - 1
    low, high = float(hull_x[left]), float(hull_x[right])
    weight_high = (prior - low) / (high - low)
    value = (1.0 - weight_high) * float(hull_y[left]) + weight_high * float(hull_y[right])
    return OracleResult(hull_x, hull_y, low, high, weight_high, value)


def solve_by_oracle(problem: StaticProblem, step: float | None = None) -> StaticSolution:
    """Solution read off the concavification oracle; used where no first order condition applies."""
    xs, values = sample_value_function(problem, step)
    result = concavify_oracle(xs, values, problem.prior_effective)
    mu = problem.prior_effective
    if result.low == result.high:
        regime = Regime.FREE_CONVICTION if mu >= problem.threshold_effective else Regime.NO_ACQUISITION
        return _degenerate(problem, regime).model_copy(update={"experimental": True})
    return StaticSolution(
        regime=Regime.INTERIOR,
        prior=mu,
        low_posterior=result.low,
        high_posterior=result.high,
        conviction_prob=result.weight_high,
        experimental=True,
    )
