"""
Recovery experiments: plant block-sparse signals, measure, recover, compare.

A trial is exact when the recovered block support equals the planted one and
``‖x̂ − x‖∞ ≤ exact_tol``. Every trial draws from its own SplitMix64 stream,
``(s << 32) | trial``, so serial and parallel runs give identical statistics.
Inside the guaranteed regime (``s ≤ s*``) every trial must be exact.
"""

import logging
from collections.abc import Iterator
from itertools import combinations
from typing import NamedTuple

import numpy as np

from eulersense._internal.rng import SplitMix64
from eulersense._internal.workers import WorkerSettings
from eulersense.enums import Solver
from eulersense.errors import (
    GuaranteeViolationError,
    HypothesisViolatedError,
    SingularSubproblemError,
)
from eulersense.ges.construct import construct_ges
from eulersense.matrix.build import build_matrix
from eulersense.matrix.operator import SensingOperator
from eulersense.recovery.guarantees import bomp_guarantee
from eulersense.recovery.models import (
    BlockSparseSignal,
    GuaranteeReport,
    RecoveryStats,
    SparsityStats,
    TrialOutcome,
)
from eulersense.recovery.params import ExperimentConfig
from eulersense.recovery.signals import fill_blocks, gen_block_sparse
from eulersense.recovery.solvers import bomp, omp

logger = logging.getLogger(__name__)


class Trial(NamedTuple):
    """One planned trial; ``support`` is fixed in exhaustive mode, drawn otherwise."""

    index: int
    s: int
    support: tuple[int, ...] | None


def trial_stream(s: int, trial: int) -> int:
    """PRNG stream of trial ``trial`` at sparsity ``s``."""
    return (s << 32) | trial


def _trials(config: ExperimentConfig) -> Iterator[Trial]:
    for s in config.sparsities:
        if config.exhaustive:
            for index, support in enumerate(combinations(range(config.blocks), s)):
                yield Trial(index, s, support)
        else:
            for index in range(config.trials):
                yield Trial(index, s, None)


def _signal(config: ExperimentConfig, trial: Trial) -> BlockSparseSignal:
    stream = trial_stream(trial.s, trial.index)
    if trial.support is None:
        return gen_block_sparse(
            config.columns, config.d, trial.s, config.value_dist, config.seed, stream
        )
    rng = SplitMix64.for_stream(config.seed, stream)
    return fill_blocks(config.columns, config.d, trial.support, config.value_dist, rng)


def run_trial(
    config: ExperimentConfig, op: SensingOperator, trial: Trial, s_star: int | None
) -> TrialOutcome:
    """Run a single trial and score it."""
    signal = _signal(config, trial)
    x = signal.to_numpy()
    y = op.apply(x)
    guaranteed = s_star is not None and trial.s <= s_star
    try:
        if config.solver == Solver.OMP:
            result = omp(op, y, trial.s, config.tol)
        else:
            result = bomp(op, y, config.d, trial.s, config.tol)
    except SingularSubproblemError as exc:
        if guaranteed:
            raise
        return TrialOutcome(
            trial=trial.index,
            s=trial.s,
            support=(),
            support_match=False,
            max_error=float(np.abs(x).max(initial=0.0)),
            residual_norm=float(np.linalg.norm(y)),
            exact=False,
            guaranteed=False,
            error=exc.message,
        )
    support = tuple(sorted(result.support))
    match = support == signal.support
    max_error = float(np.abs(result.to_numpy() - x).max(initial=0.0))
    return TrialOutcome(
        trial=trial.index,
        s=trial.s,
        support=support,
        support_match=match,
        max_error=max_error,
        residual_norm=result.residual_norm,
        exact=match and max_error <= config.exact_tol,
        guaranteed=guaranteed,
    )


def _guarantee(config: ExperimentConfig) -> GuaranteeReport | None:
    try:
        return bomp_guarantee(config.k, config.d, config.t, config.family)
    except HypothesisViolatedError as exc:
        logger.warning("No recovery guarantee: %s", exc.message)
        return None


def run_recovery_experiment(
    config: ExperimentConfig,
    *,
    strict: bool = True,
    workers: WorkerSettings | None = None,
) -> RecoveryStats:
    """
    Run every trial of ``config`` on Φ(n, k, t) scaled by ``1/√k``.

    Args:
        config: Experiment parameters.
        strict: Raise when a trial inside the guaranteed regime fails.
        workers: Worker settings for running trials in parallel.

    Returns:
        :class:`~eulersense.recovery.models.RecoveryStats` with every trial
        outcome and per-sparsity aggregates.

    Raises:
        GuaranteeViolationError: If ``strict`` and an in-regime trial is not exact.
    """
    matrix = build_matrix(construct_ges(config.n, config.k, config.t))
    op = SensingOperator(matrix, normalized=True)
    guarantee = _guarantee(config)
    s_star = guarantee.s_star if guarantee is not None else None
    settings = workers or WorkerSettings()

    logger.info(
        "Recovery on %s: solver=%s d=%d s=%s s*=%s",
        matrix,
        config.solver.value,
        config.d,
        list(config.sparsities),
        s_star,
    )
    trials = list(_trials(config))
    outcomes = list(settings.map(lambda trial: run_trial(config, op, trial, s_star), trials))

    per_sparsity = []
    for s in config.sparsities:
        group = [o for o in outcomes if o.s == s]
        exact = sum(o.exact for o in group)
        per_sparsity.append(
            SparsityStats(
                s=s,
                trials=len(group),
                exact_successes=exact,
                success_rate=exact / len(group) if group else 1.0,
                guaranteed=s_star is not None and s <= s_star,
                max_error=max((o.max_error for o in group), default=0.0),
                max_residual=max((o.residual_norm for o in group), default=0.0),
            )
        )

    failures = sum(1 for o in outcomes if o.guaranteed and not o.exact)
    stats = RecoveryStats(
        config=config,
        solver=config.solver,
        guarantee=guarantee,
        trials=len(outcomes),
        exact_successes=sum(o.exact for o in outcomes),
        max_residual=max((o.residual_norm for o in outcomes), default=0.0),
        in_regime_failures=failures,
        per_sparsity=per_sparsity,
        outcomes=outcomes,
    )
    logger.info("Recovery finished: %d/%d exact", stats.exact_successes, stats.trials)
    if strict and failures:
        raise GuaranteeViolationError(
            f"{failures} trial(s) inside the guaranteed regime s ≤ {s_star} were not exact.",
            stats=stats,
        )
    return stats
