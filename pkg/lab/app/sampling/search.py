# lab/app/sampling/search.py
"""
Sharpness search: random-restart hill descent on a check's slack.

Each restart owns the generator stream (seed, restart index), so results do
not depend on how restarts are scheduled.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from app.blocks.block import Block2x2, partition
from app.blocks.classify import classify
from app.catalog.registry import InequalityCheck, get_check
from app.catalog.results import CheckResult
from app.constants import SearchConfig, SweepConfig
from app.errors import NotApplicable
from app.linalg.matrix import ComplexMatrix
from app.logging_config import LogContext, carry_log_context, get_logger
from app.sampling.generators import SampleSpec, complex_normal, draw, project, sample, seed_entropy, trial_rng

logger = get_logger(__name__)


@dataclass(frozen=True)
class RestartOutcome:
    restart: int
    matrix: ComplexMatrix
    slack: float
    result: CheckResult
    trace: tuple[float, ...]  # slack after each accepted step, starting slack first


@dataclass(frozen=True)
class SharpnessWitness:
    check_id: str
    matrix: ComplexMatrix
    slack: float
    result: CheckResult
    params: dict[str, float] = field(default_factory=dict)
    restart_slacks: tuple[float, ...] = ()
    trace: tuple[float, ...] = ()


def default_params(check: InequalityCheck) -> dict[str, float]:
    """Middle point of the check's parameter grid."""
    grid = check.parameter_grid
    return dict(grid[len(grid) // 2])


def sigma_schedule(iterations: int, scale: float) -> np.ndarray:
    """Annealing envelope: geometric steps from SIGMA_START * scale down to SIGMA_END * scale."""
    if iterations <= 0:
        return np.empty(0)
    if iterations == 1:
        return np.array([SearchConfig.SIGMA_START * scale])
    return scale * np.geomspace(SearchConfig.SIGMA_START, SearchConfig.SIGMA_END, iterations)


class _Evaluator:
    """Slack of one check with fixed parameters, or None off its class."""

    def __init__(self, check: InequalityCheck, params: dict[str, float], tol: float | None):
        self.check = check
        self.params = params
        self.tol = tol

    def __call__(self, m: ComplexMatrix) -> CheckResult | None:
        b: Block2x2 = partition(m)
        if not self.check.is_applicable(b, classify(m)):
            return None
        return self.check.evaluate(b, tol=self.tol, **self.params)


def _descend(
    evaluate: _Evaluator,
    spec: SampleSpec,
    restart: int,
    iterations: int,
) -> RestartOutcome:
    rng = trial_rng(spec.seed, restart)
    current = draw(spec.matrix_class, spec.block_dim, rng, spec.scale)
    result = evaluate(current)
    if result is None:
        raise NotApplicable(f"{evaluate.check.id} on {spec.matrix_class.value} samples")

    target_norm = current.frobenius_norm()
    slack = result.worst_slack
    trace = [slack]
    factor = 1.0  # one-fifth success rule, kept <= 1 so the envelope still bounds the step

    for sigma in sigma_schedule(iterations, spec.scale):
        step = complex_normal(rng, current.shape) * (sigma * factor)
        proposal = project(spec.matrix_class, ComplexMatrix(current.data + step))
        norm = proposal.frobenius_norm()
        if norm == 0.0 or not math.isfinite(norm):
            continue
        proposal = proposal * (target_norm / norm)
        candidate = evaluate(proposal)
        if candidate is not None and candidate.worst_slack < slack:
            current, result, slack = proposal, candidate, candidate.worst_slack
            trace.append(slack)
            factor = min(1.0, factor * SearchConfig.STEP_GROW)
        else:
            factor = max(SearchConfig.MIN_STEP_FACTOR, factor * SearchConfig.STEP_SHRINK)

    logger.debug("sharpness_restart_finished", restart=restart, slack=slack, accepted=len(trace) - 1)
    return RestartOutcome(restart=restart, matrix=current, slack=slack, result=result, trace=tuple(trace))


def sharpness_search(
    check_id: str,
    spec: SampleSpec,
    restarts: int = SearchConfig.DEFAULT_RESTARTS,
    iterations: int = SearchConfig.DEFAULT_ITERATIONS,
    params: dict[str, float] | None = None,
    tol: float | None = None,
    workers: int | None = None,
) -> SharpnessWitness:
    """
    Drive the slack of `check_id` down over samples of `spec`'s class.

    Proposals are Gaussian perturbations projected back into the class and
    rescaled to the restart's starting Frobenius norm; a proposal is kept
    iff it is still applicable and lowers the slack. The step follows the
    annealing envelope scaled by a factor that grows on acceptance and
    shrinks on rejection. restarts = 0 returns the unperturbed sample(spec).
    """
    check = get_check(check_id)
    if restarts < 0 or iterations < 0:
        raise ValueError("restarts and iterations must be nonnegative")
    params = default_params(check) if params is None else dict(params)
    evaluate = _Evaluator(check, params, tol)

    if restarts == 0:
        m = sample(spec)
        result = evaluate(m)
        if result is None:
            raise NotApplicable(f"{check_id} on {spec.matrix_class.value} samples")
        return SharpnessWitness(
            check_id=check_id,
            matrix=m,
            slack=result.worst_slack,
            result=result,
            params=params,
            trace=(result.worst_slack,),
        )

    workers = workers or SweepConfig.get_worker_count()
    context = dict(
        check_id=check_id,
        matrix_class=spec.matrix_class.value,
        block_dim=spec.block_dim,
        seed=seed_entropy(spec.seed),
    )
    with LogContext(**context):
        logger.info("sharpness_started", restarts=restarts, iterations=iterations, workers=workers)
        descend = carry_log_context(_descend)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(lambda r: descend(evaluate, spec, r, iterations), range(restarts)))

        # ties go to the lowest restart index
        best = min(outcomes, key=lambda o: (o.slack, o.restart))
        logger.info("sharpness_finished", slack=best.slack, restart=best.restart)
    return SharpnessWitness(
        check_id=check_id,
        matrix=best.matrix,
        slack=best.slack,
        result=best.result,
        params=params,
        restart_slacks=tuple(o.slack for o in outcomes),
        trace=best.trace,
    )
