"""
Greedy block-sparse recovery on GES sensing matrices.
"""

from eulersense.recovery.experiment import Trial, run_recovery_experiment, run_trial, trial_stream
from eulersense.recovery.guarantees import bomp_guarantee, largest_below
from eulersense.recovery.models import (
    BlockSparseSignal,
    GuaranteeReport,
    RecoveryResult,
    RecoveryStats,
    SparsityStats,
    TrialOutcome,
)
from eulersense.recovery.params import ExperimentConfig
from eulersense.recovery.signals import fill_blocks, gen_block_sparse
from eulersense.recovery.solvers import bomp, omp

__all__ = [
    "BlockSparseSignal",
    "RecoveryResult",
    "TrialOutcome",
    "SparsityStats",
    "GuaranteeReport",
    "RecoveryStats",
    "ExperimentConfig",
    "gen_block_sparse",
    "fill_blocks",
    "omp",
    "bomp",
    "bomp_guarantee",
    "largest_below",
    "Trial",
    "run_trial",
    "trial_stream",
    "run_recovery_experiment",
]
