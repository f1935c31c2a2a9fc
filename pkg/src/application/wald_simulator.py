"""
wald_simulator.py

Monte Carlo version of the dynamic sampling problem behind the static solver.

The investigator observes dZ = theta dt + sigma dW with theta = +1 (guilty) or -1
(innocent), updates the belief exactly in log-odds, pays the flow cost c(belief) dt
and stops at the first exit from the static solution's support (low, high). The
log-odds increment over a step is (2 theta / sigma^2) dt + (2 / sigma) sqrt(dt) eps.

Every path owns a counter-based stream Philox(key=seed, counter=[0, 0, 0, index]), so
results do not depend on block size or worker count. A path consumes one uniform for
theta, then, per chunk of steps, the chunk's normals followed by its uniforms; the
uniforms drive the Brownian-bridge crossing test between grid points.
"""

from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Optional

import numpy as np
from numpy.typing import NDArray
from scipy.special import expit, logit  # type: ignore
from tqdm import tqdm

from src.abstractions import CostFunctionInterface, DomainError, NumericError
from src.application.settings import SETTINGS
from src.costs import FlowCost
from src.models import (
    EquivalenceReport,
    PathTable,
    Regime,
    SimConfig,
    SimulationStats,
    StaticSolution,
    ThetaBreakdown,
    ThetaMode,
    Verdict,
)
from src.utils import get_logger, worker_count

logger = get_logger("simulation.log")


def filter_belief(z_increment: float, current: float, sigma: float, dt: float) -> float:
    """
    Exact Bayes update after observing dZ over a step dt. The Gaussian log-likelihood
    ratio of drift +1 against drift -1 is ((dZ + dt)^2 - (dZ - dt)^2) / (2 sigma^2 dt),
    which reduces to 2 dZ / sigma^2.

    Raises:
        DomainError: For nonpositive sigma or dt, or a belief outside (0, 1).
    """
    if sigma <= 0.0 or dt <= 0.0:
        raise DomainError(f"sigma and dt must be positive, got sigma={sigma}, dt={dt}")
    if not 0.0 < current < 1.0:
        raise DomainError(f"Belief must lie strictly between 0 and 1, got {current}")
    log_ratio = ((z_increment + dt) ** 2 - (z_increment - dt) ** 2) / (2.0 * sigma**2 * dt)
    return float(expit(logit(current) + log_ratio))


def path_generator(seed: int, path_index: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=seed, counter=[0, 0, 0, path_index]))


def boundaries_for(solution: StaticSolution) -> tuple[float, float]:
    """
    Stopping beliefs of a static solution. Degenerate solutions stop at once; a lower
    boundary at belief 0 cannot be reached in finite time and is moved to the
    quadrature clip.
    """
    match solution.regime:
        case Regime.NO_ACQUISITION:
            return (solution.prior, 1.0)
        case Regime.FREE_CONVICTION:
            return (0.0, solution.prior)
    low = solution.low_posterior
    if low <= 0.0:
        logger.warning(f"Lower boundary at 0 moved to {SETTINGS.quadrature.clip:g}")
        low = SETTINGS.quadrature.clip
    return (low, solution.high_posterior)


def sim_config_for(
    solution: StaticSolution,
    cost: CostFunctionInterface,
    sigma: float,
    n_paths: int,
    seed: int = 0,
    dt: Optional[float] = None,
    theta_mode: ThetaMode = "prior",
    true_prior: Optional[float] = None,
    bridge_correction: bool = True,
    max_steps: Optional[int] = None,
) -> SimConfig:
    """Simulation of a static solution with the flow cost whose static image is `cost`."""
    settings = SETTINGS.simulation
    if isinstance(cost, FlowCost) and cost.sigma == sigma:
        flow: Callable[[Any], Any] = cost.flow
    else:
        flow = cost.flow_cost_preimage(sigma)
    return SimConfig(
        sigma=sigma,
        dt=settings.dt_factor * sigma**2 if dt is None else dt,
        n_paths=n_paths,
        seed=seed,
        theta_mode=theta_mode,
        theta_prior=solution.prior if theta_mode == "prior" else None,
        boundaries=boundaries_for(solution),
        prior_subjective=solution.prior,
        flow_cost=flow,
        true_prior=true_prior,
        bridge_correction=bridge_correction,
        max_steps=settings.max_steps if max_steps is None else max_steps,
        block_size=settings.block_size,
        chunk_steps=settings.chunk_steps,
        resolution_guard=settings.resolution_guard,
    )


def _draw_theta(config: SimConfig, uniform: float) -> int:
    match config.theta_mode:
        case "guilty":
            return 1
        case "innocent":
            return -1
    assert config.theta_prior is not None
    return 1 if uniform < config.theta_prior else -1


def _flow(config: SimConfig, beliefs: NDArray[np.float64]) -> NDArray[np.float64]:
    flat = np.asarray(config.flow_cost(beliefs.ravel()), dtype=float)
    return np.broadcast_to(flat, beliefs.ravel().shape).reshape(beliefs.shape)


def _simulate_block(config: SimConfig, start: int, stop: int) -> PathTable:
    """Paths [start, stop), vectorized across paths and over the steps of a chunk."""
    n = stop - start
    generators = [path_generator(config.seed, index) for index in range(start, stop)]
    theta = np.array([_draw_theta(config, gen.random()) for gen in generators], dtype=np.int8)

    low, high = config.boundaries
    lower = float(logit(low)) if low > 0.0 else -np.inf
    upper = float(logit(high)) if high < 1.0 else np.inf
    prior = config.prior_subjective

    hit_high = np.zeros(n, dtype=bool)
    stop_time = np.zeros(n)
    cost = np.zeros(n)
    true_cost = np.zeros(n)
    truncated = np.zeros(n, dtype=bool)
    if prior <= low or prior >= high:
        hit_high[:] = prior >= high
        return PathTable(np.arange(start, stop), theta, hit_high, stop_time, cost, true_cost, truncated)

    dt, sigma = config.dt, config.sigma
    diffusion = 2.0 / sigma
    bridge_scale = 2.0 / (diffusion**2 * dt)
    shift = 0.0 if config.true_prior is None else float(logit(config.true_prior) - logit(prior))
    drift = 2.0 * theta.astype(float) / sigma**2 * dt

    active = np.arange(n)
    level = np.full(n, float(logit(prior)))
    steps = 0
    while active.size and steps < config.max_steps:
        m = min(config.chunk_steps, config.max_steps - steps)
        normals = np.empty((active.size, m))
        uniforms = np.empty((active.size, m))
        for row, k in enumerate(active):
            normals[row] = generators[k].standard_normal(m)
            uniforms[row] = generators[k].random(m)

        increments = drift[active, None] + diffusion * np.sqrt(dt) * normals
        ends = level[active, None] + np.cumsum(increments, axis=1)
        starts = np.concatenate([level[active, None], ends[:, :-1]], axis=1)

        up = ends >= upper
        down = ends <= lower
        bridge_up = np.zeros_like(up)
        bridge_down = np.zeros_like(down)
        if config.bridge_correction:
            with np.errstate(over="ignore", invalid="ignore"):
                p_up = np.where(np.isfinite(upper), np.exp(-bridge_scale * (upper - starts) * (upper - ends)), 0.0)
                p_down = np.where(np.isfinite(lower), np.exp(-bridge_scale * (starts - lower) * (ends - lower)), 0.0)
            inside = ~(up | down)
            bridge_up = inside & (uniforms < p_up)
            bridge_down = inside & ~bridge_up & (uniforms < p_up + p_down)

        event = up | down | bridge_up | bridge_down
        absorbed = event.any(axis=1)
        first = np.where(absorbed, event.argmax(axis=1), m)
        rows = np.arange(active.size)

        before = np.arange(m)[None, :] < first[:, None]
        midpoints = 0.5 * (starts + ends)
        cost[active] += dt * np.sum(np.where(before, _flow(config, expit(midpoints)), 0.0), axis=1)
        if config.true_prior is not None:
            true_cost[active] += dt * np.sum(np.where(before, _flow(config, expit(midpoints + shift)), 0.0), axis=1)

        done = rows[absorbed]
        if done.size:
            k = first[done]
            start_level, end_level = starts[done, k], ends[done, k]
            went_up = up[done, k] | bridge_up[done, k]
            boundary = np.where(went_up, upper, lower)
            direct = up[done, k] | down[done, k]
            with np.errstate(divide="ignore", invalid="ignore"):
                linear = (boundary - start_level) / (end_level - start_level)
            fraction = np.where(direct, np.clip(linear, 0.0, 1.0), 0.5)
            partial_mid = 0.5 * (start_level + np.where(direct, boundary, end_level))
            paths = active[done]
            cost[paths] += fraction * dt * _flow(config, expit(partial_mid))
            if config.true_prior is not None:
                true_cost[paths] += fraction * dt * _flow(config, expit(partial_mid + shift))
            hit_high[paths] = went_up
            stop_time[paths] = (steps + k + fraction) * dt

        level[active] = ends[:, -1]
        active = active[~absorbed]
        steps += m

    truncated[active] = True
    stop_time[active] = steps * dt
    return PathTable(np.arange(start, stop), theta, hit_high, stop_time, cost, true_cost, truncated)


def simulate_paths(config: SimConfig, show_progress: bool = False) -> PathTable:
    """Per-path results in path-index order."""
    bounds = [
        (start, min(start + config.block_size, config.n_paths))
        for start in range(0, config.n_paths, config.block_size)
    ]
    with ThreadPoolExecutor(max_workers=worker_count()) as pool:
        blocks = list(
            tqdm(
                pool.map(lambda span: _simulate_block(config, *span), bounds),
                total=len(bounds),
                desc="paths",
                disable=not show_progress,
            )
        )
    return PathTable(*(np.concatenate(column) for column in zip(*blocks)))


def _binomial_radius(p: float, n: int) -> float:
    return float(np.sqrt(p * (1.0 - p) / n)) if n else 0.0


def _standard_error(values: NDArray[np.float64]) -> float:
    return float(np.std(values, ddof=1) / np.sqrt(values.size)) if values.size > 1 else 0.0


def summarize(config: SimConfig, table: PathTable) -> SimulationStats:
    """
    Raises:
        NumericError: If more than the allowed share of paths hit max_steps.
    """
    n = table.path.size
    n_truncated = int(table.truncated.sum())
    if n_truncated:
        logger.warning(f"{n_truncated} of {n} paths reached max_steps={config.max_steps}")
    if n_truncated > SETTINGS.simulation.truncation_limit * n:
        raise NumericError(f"{n_truncated} of {n} paths truncated at max_steps={config.max_steps}")

    done = ~table.truncated
    completed = int(done.sum())
    hits = table.hit_high[done]
    hit_freq = float(hits.mean()) if completed else 0.0
    low, high = config.boundaries
    stopped = np.where(hits, high, low)

    per_theta: dict[str, ThetaBreakdown] = {}
    for label, value in (("guilty", 1), ("innocent", -1)):
        group = done & (table.theta == value)
        size = int(group.sum())
        if size:
            freq = float(table.hit_high[group].mean())
            per_theta[label] = ThetaBreakdown(
                n_paths=size,
                hit_high_freq=freq,
                hit_high_radius=_binomial_radius(freq, size),
                mean_flow_cost=float(table.cost[group].mean()),
                mean_stop_time=float(table.stop_time[group].mean()),
            )

    track_true = config.true_prior is not None
    return SimulationStats(
        n_paths=n,
        truncated=n_truncated,
        hit_high_freq=hit_freq,
        hit_high_radius=_binomial_radius(hit_freq, completed),
        hit_low_freq=1.0 - hit_freq if completed else 0.0,
        mean_flow_cost=float(table.cost[done].mean()) if completed else 0.0,
        flow_cost_se=_standard_error(table.cost[done]),
        mean_stop_time=float(table.stop_time[done].mean()) if completed else 0.0,
        stopped_belief_mean=float(stopped.mean()) if completed else config.prior_subjective,
        stopped_belief_se=_standard_error(stopped),
        per_theta=per_theta,
        mean_true_cost=float(table.true_cost[done].mean()) if track_true and completed else None,
        true_cost_se=_standard_error(table.true_cost[done]) if track_true else None,
    )


def run_paths(config: SimConfig, show_progress: bool = False) -> SimulationStats:
    stats = summarize(config, simulate_paths(config, show_progress))
    logger.info(
        f"Simulated {stats.n_paths} paths: hit_high={stats.hit_high_freq:.6f}, "
        f"flow cost={stats.mean_flow_cost:.6f} +/- {stats.flow_cost_se:.2g}"
    )
    return stats


def predicted_hit_probability(solution: StaticSolution, theta_mode: ThetaMode) -> float:
    """Probability of stopping at the high boundary: p under the prior, gamma or lambda given theta."""
    match solution.regime:
        case Regime.NO_ACQUISITION:
            return 0.0
        case Regime.FREE_CONVICTION:
            return 1.0
    p, mu, high = solution.conviction_prob, solution.prior, solution.high_posterior
    match theta_mode:
        case "guilty":
            return p * high / mu
        case "innocent":
            return p * (1.0 - high) / (1.0 - mu)
    return p


def validate_equivalence(
    solution: StaticSolution,
    cost: CostFunctionInterface,
    config: SimConfig,
    show_progress: bool = False,
    table: Optional[PathTable] = None,
) -> EquivalenceReport:
    """
    Simulate a static solution and compare: hitting frequency within three binomial
    standard deviations, mean flow cost within max(relative tolerance, three standard
    errors) of the static cost, stopped belief within three standard errors of the prior.
    The cost and stopped-belief checks need theta drawn from the subjective prior.
    An already simulated `table` for the same config is reused.
    """
    bound = SETTINGS.simulation.sigma_bound
    if solution.regime is Regime.INTERIOR:
        static_cost = cost.static_cost(solution.support, solution.support_weights) - float(cost.phi(solution.prior))
    else:
        static_cost = 0.0
    predicted = predicted_hit_probability(solution, config.theta_mode)
    if table is None:
        table = simulate_paths(config, show_progress)
    stats = summarize(config, table)
    completed = stats.n_paths - stats.truncated
    parameters: dict[str, float | str] = {
        "sigma": config.sigma,
        "dt": config.dt,
        "n_paths": float(config.n_paths),
        "theta_mode": config.theta_mode,
    }

    hit_gap = abs(stats.hit_high_freq - predicted)
    checks = [
        Verdict(
            claim="hit_high_frequency",
            parameters=parameters,
            expected=f"{predicted:.6g} within {bound:g} binomial sd",
            observed=stats.hit_high_freq,
            passed=hit_gap <= bound * _binomial_radius(predicted, completed) + 1e-12,
        )
    ]
    under_prior = config.theta_mode == "prior" and config.theta_prior == config.prior_subjective
    if under_prior:
        cost_tolerance = max(SETTINGS.simulation.cost_relative_tolerance * static_cost, bound * stats.flow_cost_se)
        checks.append(
            Verdict(
                claim="mean_flow_cost",
                parameters=parameters,
                expected=f"{static_cost:.6g} within {cost_tolerance:.3g}",
                observed=stats.mean_flow_cost,
                passed=abs(stats.mean_flow_cost - static_cost) <= cost_tolerance + 1e-12,
            )
        )
        checks.append(
            Verdict(
                claim="stopped_belief_mean",
                parameters=parameters,
                expected=f"{config.prior_subjective:.6g} within {bound:g} standard errors",
                observed=stats.stopped_belief_mean,
                passed=abs(stats.stopped_belief_mean - config.prior_subjective)
                <= bound * stats.stopped_belief_se + 1e-12,
            )
        )
    report = EquivalenceReport(
        static_cost=static_cost,
        predicted_conviction_prob=predicted,
        stats=stats,
        checks=checks,
    )
    logger.info(f"Equivalence checks passed={report.passed}")
    return report
