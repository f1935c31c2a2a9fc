"""
verification_suites.py

Named numeric checks of the model's claims, each run at the parameter points listed
under `verification` in config.yaml. A suite returns one Verdict per checked claim;
`quick` coarsens grids and path counts.
"""

from collections.abc import Callable

import numpy as np

from src.abstractions import DomainError
from src.application.belief_geometry import effective_threshold_biased_L, odds
from src.application.bias_analysis import (
    implicit_low_posterior_claims,
    lemma1_classify,
    prop3_threshold,
    sweep_bias,
    theorem1_classify,
    theorem2_compare,
    variance_lambda_biased_L,
)
from src.application.persuasion_solver import solve_by_oracle, solve_static
from src.application.preference_bias import preference_problem, preference_statics, solve_preference
from src.application.settings import SETTINGS
from src.application.wald_simulator import sim_config_for, validate_equivalence
from src.costs import EntropyCost, LogLikelihoodCost, VarianceCost
from src.models import (
    CostSpec,
    EntropySpec,
    LogLikelihoodSpec,
    PreferenceParams,
    ScenarioFile,
    StaticProblem,
    TsallisSpec,
    VarianceSpec,
    Verdict,
)
from src.utils import central_difference, get_logger, parse_grid

logger = get_logger("verification.log")

Suite = Callable[[bool], list[Verdict]]

SIGN_TOLERANCE = 1e-12


def _grid(start: float, stop: float, step: float) -> list[float]:
    return [float(x) for x in parse_grid(f"{start}:{stop}:{step}") if x < stop - 1e-12]


def _scenario(mu: float, a: float, v: float, cost: CostSpec) -> ScenarioFile:
    return ScenarioFile(mu=mu, a=a, v=v, sigma=1.0, cost=cost)


def _nondecreasing(values: list[float]) -> bool:
    return all(later >= earlier - SIGN_TOLERANCE for earlier, later in zip(values, values[1:]))


def remark1(quick: bool) -> list[Verdict]:
    """gamma, lambda and p_true move together along a biased-investigator sweep."""
    point = SETTINGS.verification.running_example
    step = SETTINGS.verification.sweep_step * (2.0 if quick else 1.0)
    families: list[CostSpec] = [
        VarianceSpec(family="variance", kappa=point.kappa),
        EntropySpec(family="entropy"),
        LogLikelihoodSpec(family="log_likelihood"),
        TsallisSpec(family="tsallis", kappa=1.0, q=2.0),
    ]
    verdicts = []
    for spec in families:
        rows = sweep_bias(_scenario(point.mu, point.a, point.v, spec), "L", _grid(point.mu, point.a, step))
        clashes = 0
        for earlier, later in zip(rows, rows[1:]):
            moves = np.array([later.gamma - earlier.gamma, later.lambda_ - earlier.lambda_, later.p_true - earlier.p_true])
            signs = {int(np.sign(m)) for m in moves if abs(m) > SIGN_TOLERANCE}
            clashes += len(signs) > 1
        verdicts.append(
            Verdict(
                claim="remark1_comonotone",
                parameters={"family": spec.family, "mu": point.mu, "a": point.a, "v": point.v},
                expected="gamma, lambda and p_true move in the same direction",
                observed=float(clashes),
                passed=bool(clashes == 0),
            )
        )
    return verdicts


def lemma1(quick: bool) -> list[Verdict]:
    """Slope sign of the minimal reward ratio next to the prior, and the location of its peak."""
    size = 5 if quick else SETTINGS.verification.grid_size
    scan_step = 1e-3 if quick else 1e-4
    fd = SETTINGS.finite_differences
    mismatches = 0
    worst_peak_gap = 0.0
    for mu in np.linspace(0.05, 0.8, size):
        for a in np.linspace(mu + 0.05, 0.95, size):
            gap = 1.0 - mu - a
            if abs(gap) < 1e-3:
                continue
            slope = central_difference(
                lambda x: float(_ubar(mu, a, np.array([x]))[0]), float(mu), fd.step, fd.richardson_step, fd.disagreement
            )
            mismatches += bool(np.sign(slope) != np.sign(gap))
            verdict = lemma1_classify(float(mu), float(a))
            if verdict.mu_L_dagger is not None:
                xs = np.arange(mu, 1.0, scan_step)
                peak = float(xs[int(np.argmax(_ubar(mu, a, xs)))])
                worst_peak_gap = max(worst_peak_gap, abs(peak - verdict.mu_L_dagger))
    return [
        Verdict(
            claim="lemma1_slope_sign",
            parameters={"grid": float(size)},
            expected="sign of d(ubar_d)/d(mu_L) at the prior equals sign(1 - mu - a)",
            observed=float(mismatches),
            passed=bool(mismatches == 0),
        ),
        Verdict(
            claim="lemma1_peak_location",
            parameters={"grid": float(size), "scan_step": scan_step},
            expected="mu_L dagger within 1e-3 of the numeric peak",
            observed=worst_peak_gap,
            passed=bool(worst_peak_gap <= 1e-3),
        ),
    ]


def _ubar(mu: float, a: float, mu_l: np.ndarray) -> np.ndarray:
    ratio = odds(mu_l) / odds(mu)
    return ratio * a / (ratio * a + 1.0 - a) - mu_l


def thm1(quick: bool) -> list[Verdict]:
    point = SETTINGS.verification.running_example
    d = float(np.sqrt(point.v / point.kappa))
    verdict = theorem1_classify(point.mu, point.a, d)
    minimizer = verdict.lambda_minimizer if verdict.lambda_minimizer is not None else float("nan")

    step = 1e-2 if quick else 1e-3
    scenario = _scenario(point.mu, point.a, point.v, VarianceSpec(family="variance", kappa=point.kappa))
    rows = sweep_bias(scenario, "L", _grid(point.mu, point.a, step))
    before = [row.lambda_ for row in rows if row.mu_B < minimizer]
    after = [row.lambda_ for row in rows if row.mu_B > minimizer]
    closed = [variance_lambda_biased_L(point.mu, row.mu_B, point.a, d) for row in rows]
    closed_gap = max(abs(row.lambda_ - value) for row, value in zip(rows, closed))

    harmful = SETTINGS.verification.theorem1_harmful
    harmful_verdict = theorem1_classify(harmful.mu, harmful.a, harmful.d)
    harmful_scenario = _scenario(harmful.mu, harmful.a, 1.0, VarianceSpec(family="variance", kappa=1.0 / harmful.d**2))
    harmful_rows = sweep_bias(harmful_scenario, "L", _grid(harmful.mu, harmful.a, 10 * step))
    baseline = theorem1_classify(point.mu, 0.8, d)

    parameters: dict[str, float | str] = {"mu": point.mu, "a": point.a, "d": d}
    return [
        Verdict(claim="thm1_classification", parameters=parameters, expected="BiasBeneficialNearPrior",
                observed=verdict.classification.value,
                passed=verdict.classification.value == "BiasBeneficialNearPrior"),
        Verdict(claim="thm1_minimizer", parameters=parameters, expected="1/3 within 1e-3",
                observed=minimizer, passed=bool(abs(minimizer - 1.0 / 3.0) <= 1e-3)),
        Verdict(claim="thm1_u_shape", parameters=parameters,
                expected="lambda strictly decreasing before the minimizer, increasing after",
                observed=float(len(rows)),
                passed=all(y < x for x, y in zip(before, before[1:])) and all(y > x for x, y in zip(after, after[1:]))),
        Verdict(claim="thm1_closed_form", parameters=parameters, expected="solver lambda equals closed form to 1e-10",
                observed=closed_gap, passed=bool(closed_gap <= 1e-10)),
        Verdict(claim="thm1_harmful", parameters={"mu": harmful.mu, "a": harmful.a, "d": harmful.d},
                expected="BiasHarmful and lambda nondecreasing", observed=harmful_verdict.classification.value,
                passed=harmful_verdict.classification.value == "BiasHarmful"
                and _nondecreasing([row.lambda_ for row in harmful_rows])),
        Verdict(claim="thm1_no_investigation", parameters={"mu": point.mu, "a": 0.8, "d": d},
                expected="NoInvestigationBaseline", observed=baseline.classification.value,
                passed=baseline.classification.value == "NoInvestigationBaseline"),
    ]


def prop1(quick: bool) -> list[Verdict]:
    """lambda_hat is nondecreasing in the decision-maker's prior."""
    point = SETTINGS.verification.running_example
    step = 0.01 if quick else SETTINGS.verification.prop1_step
    families: list[CostSpec] = [
        VarianceSpec(family="variance", kappa=point.kappa),
        EntropySpec(family="entropy"),
        LogLikelihoodSpec(family="log_likelihood"),
    ]
    verdicts = []
    for spec in families:
        rows = sweep_bias(_scenario(point.mu, point.a, point.v, spec), "DM", _grid(point.mu, 0.995, step))
        verdicts.append(
            Verdict(
                claim="prop1_lambda_hat_monotone",
                parameters={"family": spec.family, "mu": point.mu, "a": point.a, "step": step},
                expected="lambda_hat nondecreasing in mu_DM",
                observed=rows[-1].lambda_,
                passed=_nondecreasing([row.lambda_ for row in rows]),
            )
        )
    return verdicts


def prop3(quick: bool) -> list[Verdict]:
    window = SETTINGS.verification.prop3_window
    inside = prop3_threshold(window.mu, window.a, window.d)
    point = SETTINGS.verification.running_example
    d = float(np.sqrt(point.v / point.kappa))
    outside = prop3_threshold(point.mu, point.a, d)
    return [
        Verdict(
            claim="prop3_threshold_exists",
            parameters={"mu": window.mu, "a": window.a, "d": window.d},
            expected="a single sign change of lambda - lambda_hat in (mu, a)",
            observed=inside.mu_B_diamond,
            passed=inside.applicable and inside.mu_B_diamond is not None and inside.sign_changes == 1,
        ),
        Verdict(
            claim="prop3_investigator_bias_preferred",
            parameters={"mu": point.mu, "a": point.a, "d": d},
            expected="no threshold and lambda <= lambda_hat throughout",
            observed=outside.investigator_bias_weakly_preferred,
            passed=not outside.applicable and outside.investigator_bias_weakly_preferred,
        ),
    ]


def thm2(quick: bool) -> list[Verdict]:
    point = SETTINGS.verification.theorem2
    verdicts = []
    for cost in (LogLikelihoodCost(point.mu), EntropyCost(point.mu)):
        result = theorem2_compare(cost, point.mu, point.epsilon, scan_rewards=not quick)
        verdicts.append(
            Verdict(
                claim="thm2_slopes",
                parameters={"family": cost.family, "mu": point.mu, "a": result.a, "v": result.v},
                expected="lambda' > lambda_hat' at no bias and 1 - q(a) > 0",
                observed=result.one_minus_q,
                passed=bool(result.lambda_slope_L > result.lambda_slope_DM and result.one_minus_q > 0.0),
            )
        )

    example = SETTINGS.verification.running_example
    claims = implicit_low_posterior_claims(VarianceCost(example.kappa, example.mu), example.mu, example.a, 0.81, example.mu_L)
    expected_signs = {"b_L/mu_L": 1, "b_L/v": -1, "b_DM/mu_DM": -1, "b_DM/v": -1}
    for name, slope in claims.items():
        verdicts.append(
            Verdict(
                claim=f"claims_{name}",
                parameters={"mu": example.mu, "a": example.a, "v": 0.81, "mu_B": example.mu_L},
                expected="positive" if expected_signs[name] > 0 else "negative",
                observed=slope,
                passed=bool(np.sign(slope) == expected_signs[name]),
            )
        )
    return verdicts


def _preference_point() -> tuple[PreferenceParams, float, VarianceCost]:
    point = SETTINGS.verification.preference
    params = PreferenceParams(eta=point.eta, rho=point.rho, v=point.v, a=point.a)
    return params, point.mu, VarianceCost(point.kappa, point.mu)


def prop4(quick: bool) -> list[Verdict]:
    params, mu, cost = _preference_point()
    point = SETTINGS.verification.preference
    result = solve_preference(params, mu, cost)
    oracle = solve_by_oracle(preference_problem(params, mu, cost))
    lowered = solve_preference(PreferenceParams(eta=params.eta, rho=params.rho, v=params.v, a=point.lowered_a), mu, cost)
    b = result.solution.low_posterior
    expected_b = point.a - float(np.sqrt(params.shape.effective_reward(point.a) / point.kappa))
    ratio = result.outcome.gamma / result.outcome.lambda_
    parameters: dict[str, float | str] = {"mu": mu, "a": params.a, "eta": params.eta, "rho": params.rho, "v": params.v}
    return [
        Verdict(claim="prop4_binding_root", parameters=parameters, expected=f"b = {expected_b:.6f} within 1e-4",
                observed=b, passed=bool(result.binding and abs(b - expected_b) <= 1e-4)),
        Verdict(claim="prop4_oracle_agrees", parameters=parameters, expected="oracle low posterior within 2e-4",
                observed=oracle.low_posterior, passed=bool(abs(oracle.low_posterior - b) <= 2e-4)),
        Verdict(claim="prop4_conditional_ratio", parameters=parameters,
                expected="gamma / lambda = (a / (1 - a)) ((1 - mu) / mu)", observed=ratio,
                passed=bool(abs(ratio - params.a / (1.0 - params.a) * (1.0 - mu) / mu) <= 1e-9)),
        Verdict(claim="prop4_bias_raises_lambda", parameters={**parameters, "lowered_a": point.lowered_a},
                expected="lambda at the lowered threshold exceeds lambda at a",
                observed=lowered.outcome.lambda_, passed=bool(lowered.outcome.lambda_ > result.outcome.lambda_)),
    ]


def prop5(quick: bool) -> list[Verdict]:
    params, mu, cost = _preference_point()
    grid = SETTINGS.verification.preference_grid
    points = [params]
    if not quick:
        points += [
            PreferenceParams(eta=eta, rho=rho, v=v, a=params.a)
            for eta in grid.eta
            for rho in grid.rho
            for v in grid.v
        ]
    verdicts = []
    for point in points:
        if not solve_preference(point, mu, cost).binding:
            logger.info(f"Skipping non-binding point eta={point.eta}, rho={point.rho}, v={point.v}")
            continue
        report = preference_statics(point, mu, cost)
        verdicts.append(
            Verdict(
                claim="prop5_statics_signs",
                parameters={"eta": point.eta, "rho": point.rho, "v": point.v, "a": point.a, "mu": mu},
                expected="numeric slopes of lambda in a, v, rho, eta match the analytic signs",
                observed=",".join(f"{entry.parameter}:{entry.numeric_slope:+.3g}" for entry in report.entries),
                passed=bool(report.passed),
            )
        )
    if not verdicts:
        verdicts.append(
            Verdict(
                claim="prop5_binding_points",
                parameters={"points": float(len(points)), "mu": mu},
                expected="at least one point where the threshold constraint binds",
                observed=0.0,
                passed=False,
            )
        )
    return verdicts


def equivalence(quick: bool) -> list[Verdict]:
    settings = SETTINGS.simulation
    n_paths = settings.quick_paths if quick else settings.full_paths
    point = SETTINGS.verification.running_example
    cost = VarianceCost(point.kappa, point.mu_L)
    problem = StaticProblem(
        prior_effective=point.mu_L,
        threshold_effective=effective_threshold_biased_L(point.mu, point.mu_L, point.a),
        reward=point.v,
        cost=cost,
    )
    solution = solve_static(problem)
    verdicts = []
    for mode in ("prior", "guilty", "innocent"):
        config = sim_config_for(solution, cost, sigma=1.0, n_paths=n_paths, seed=0, theta_mode=mode)
        verdicts += validate_equivalence(solution, cost, config).checks

    entropy_prior = 0.3
    entropy = EntropyCost(entropy_prior)
    entropy_solution = solve_static(
        StaticProblem(prior_effective=entropy_prior, threshold_effective=0.6, reward=0.3, cost=entropy)
    )
    config = sim_config_for(entropy_solution, entropy, sigma=1.0, n_paths=n_paths, seed=1)
    verdicts += validate_equivalence(entropy_solution, entropy, config).checks
    return verdicts


SUITES: dict[str, Suite] = {
    "remark1": remark1,
    "lemma1": lemma1,
    "thm1": thm1,
    "prop1": prop1,
    "prop3": prop3,
    "thm2": thm2,
    "prop4": prop4,
    "prop5": prop5,
    "equivalence": equivalence,
}


def run_suite(name: str, quick: bool = False) -> list[Verdict]:
    """
    Raises:
        DomainError: For unknown suite names.
    """
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise DomainError(f"Unknown suite '{name}', expected one of {['all', *SUITES]}")
    verdicts: list[Verdict] = []
    for suite in names:
        results = SUITES[suite](quick)
        failed = [verdict.claim for verdict in results if not verdict.passed]
        logger.info(f"Suite {suite}: {len(results) - len(failed)}/{len(results)} passed")
        if failed:
            logger.warning(f"Suite {suite} failed: {', '.join(failed)}")
        verdicts += results
    return verdicts
