# lab/app/sampling/sweep.py
"""
Soundness sweeps: every applicable check on seeded samples of one class,
aggregated per check id.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from app.blocks.block import partition
from app.blocks.classify import classify
from app.catalog.registry import InequalityCheck, get_check, registry
from app.constants import MatrixClass, SweepConfig, Tolerance
from app.linalg.matrix import ComplexMatrix
from app.logging_config import LogContext, carry_log_context, get_logger
from app.models import IdSummary, MatrixPayload, SweepReport, WitnessPayload
from app.sampling.generators import default_class, draw, seed_entropy, trial_rng

logger = get_logger(__name__)


@dataclass(frozen=True)
class Evaluation:
    check_id: str
    trial: int
    params: dict[str, float]
    applicable: bool
    slack: float | None = None
    holds: bool | None = None


@dataclass(frozen=True)
class TrialOutcome:
    trial: int
    matrix: ComplexMatrix
    evaluations: tuple[Evaluation, ...]


def _run_trial(
    checks: list[InequalityCheck],
    matrix_class: MatrixClass,
    block_dim: int,
    seed: int,
    trial: int,
    tol: float,
) -> TrialOutcome:
    m = draw(matrix_class, block_dim, trial_rng(seed, trial))
    b = partition(m)
    operator_class = classify(m)
    evaluations: list[Evaluation] = []
    for check in checks:
        applicable = check.is_applicable(b, operator_class)
        for params in check.parameter_grid:
            if not applicable:
                evaluations.append(Evaluation(check.id, trial, dict(params), applicable=False))
                continue
            result = check.evaluate(b, tol=tol, **params)
            evaluations.append(
                Evaluation(check.id, trial, dict(params), applicable=True, slack=result.worst_slack, holds=result.holds)
            )
            if not result.holds and not check.expected_falsifiable:
                logger.warning("check_violated", check_id=check.id, trial=trial, params=params, slack=result.worst_slack)
    return TrialOutcome(trial=trial, matrix=m, evaluations=tuple(evaluations))


class _Tally:
    """Running per-id aggregate; fed in trial order."""

    def __init__(self, check: InequalityCheck):
        self.check = check
        self.count = 0
        self.applicable = 0
        self.violations = 0
        self.total = 0.0
        self.min_slack: float | None = None
        self.witness: WitnessPayload | None = None

    def add(self, evaluation: Evaluation, matrix: ComplexMatrix) -> None:
        self.count += 1
        if not evaluation.applicable or evaluation.slack is None:
            return
        self.applicable += 1
        self.total += evaluation.slack
        if not evaluation.holds:
            self.violations += 1
        if self.min_slack is None or evaluation.slack < self.min_slack:
            self.min_slack = evaluation.slack
            self.witness = WitnessPayload(
                matrix=MatrixPayload.from_matrix(matrix),
                params=evaluation.params,
                slack=evaluation.slack,
                trial=evaluation.trial,
            )

    def summary(self) -> IdSummary:
        return IdSummary(
            id=self.check.id,
            statement=self.check.statement,
            expected_falsifiable=self.check.expected_falsifiable,
            count=self.count,
            applicable=self.applicable,
            violations=self.violations,
            min_slack=self.min_slack,
            mean_slack=self.total / self.applicable if self.applicable else None,
            worst_witness=self.witness,
        )


def run_sweep(
    matrix_class: MatrixClass | str,
    block_dim: int = SweepConfig.DEFAULT_BLOCK_DIM,
    trials: int = SweepConfig.DEFAULT_TRIALS,
    seed: int = SweepConfig.DEFAULT_SEED,
    tol: float | None = None,
    check_ids: list[str] | None = None,
    workers: int | None = None,
) -> SweepReport:
    """
    Evaluate every check (or `check_ids`) on `trials` samples.

    Trial k draws from SeedSequence([seed, k]); trials may run on a thread
    pool and are aggregated in trial order, so the report does not depend
    on the worker count.
    """
    matrix_class = MatrixClass(matrix_class)
    if block_dim < 1:
        raise ValueError(f"block_dim must be positive, got {block_dim}")
    if trials < 0:
        raise ValueError(f"trials must be nonnegative, got {trials}")
    tol = Tolerance.get_check_tolerance() if tol is None else tol
    checks = registry() if check_ids is None else [get_check(i) for i in check_ids]
    workers = workers or SweepConfig.get_worker_count()

    tallies = {check.id: _Tally(check) for check in checks}
    with LogContext(matrix_class=matrix_class.value, block_dim=block_dim, seed=seed_entropy(seed)):
        logger.info("sweep_started", trials=trials, checks=len(checks), workers=workers)
        run_trial = carry_log_context(_run_trial)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = pool.map(
                lambda k: run_trial(checks, matrix_class, block_dim, seed, k, tol),
                range(trials),
            )
            for outcome in outcomes:
                for evaluation in outcome.evaluations:
                    tallies[evaluation.check_id].add(evaluation, outcome.matrix)

        summaries = [tallies[check.id].summary() for check in checks]
        report = SweepReport(
            matrix_class=matrix_class.value,
            block_dim=block_dim,
            trials=trials,
            seed=seed,
            tol=tol,
            checks=[s for s in summaries if not s.expected_falsifiable],
            probes=[s for s in summaries if s.expected_falsifiable],
        )
        logger.info(
            "sweep_finished",
            violations=sum(s.violations for s in report.checks),
            probe_violations=sum(s.violations for s in report.probes),
        )
    return report


def campaign_plan(checks: list[InequalityCheck] | None = None) -> dict[MatrixClass, list[str]]:
    """Non-probe check ids grouped by the sampler class that always satisfies them."""
    plan: dict[MatrixClass, list[str]] = {}
    for check in registry() if checks is None else checks:
        if check.expected_falsifiable:
            continue
        plan.setdefault(default_class(check.applicability), []).append(check.id)
    return plan


def run_campaign(
    block_dims: tuple[int, ...] = SweepConfig.CAMPAIGN_BLOCK_DIMS,
    trials: int = SweepConfig.DEFAULT_TRIALS,
    seed: int = SweepConfig.DEFAULT_SEED,
    tol: float | None = None,
    workers: int | None = None,
) -> list[SweepReport]:
    """Soundness campaign: one sweep per (class, block dim) of campaign_plan()."""
    return [
        run_sweep(matrix_class, block_dim, trials, seed, tol=tol, check_ids=ids, workers=workers)
        for matrix_class, ids in campaign_plan().items()
        for block_dim in block_dims
    ]
