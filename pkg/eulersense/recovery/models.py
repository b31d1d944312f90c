"""
Models for block-sparse signals, solver results and experiment statistics.
"""

from typing import Any

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, Field

from eulersense.analysis.models import Rational
from eulersense.enums import Family, Solver
from eulersense.errors import ParameterViolationError
from eulersense.recovery.params import ExperimentConfig


class BlockSparseSignal(BaseModel, frozen=True):
    """
    A signal of length ``M`` split into ``M/d`` blocks of length ``d``,
    nonzero on exactly the blocks in ``support``.

    Args:
        length: Signal length ``M``.
        d: Block length.
        support: Ascending indices of the nonzero blocks.
        values: All ``M`` entries.
    """

    length: int = Field(ge=1)
    d: int = Field(ge=1)
    support: tuple[int, ...]
    values: tuple[float, ...] = Field(repr=False)

    def model_post_init(self, __context: Any) -> None:
        if self.length % self.d:
            raise ParameterViolationError(f"Block length {self.d} does not divide {self.length}.")
        if len(self.values) != self.length:
            raise ParameterViolationError(
                f"Expected {self.length} values, got {len(self.values)}."
            )
        if list(self.support) != sorted(set(self.support)):
            raise ParameterViolationError(f"Support must be ascending and distinct: {self.support}")
        nonzero = np.flatnonzero(np.abs(self.to_numpy().reshape(-1, self.d)).sum(axis=1) > 0)
        if tuple(nonzero.tolist()) != self.support:
            raise ParameterViolationError(
                f"Nonzero blocks {nonzero.tolist()} do not match support {list(self.support)}."
            )

    @property
    def blocks(self) -> int:
        """Number of blocks ``R = M/d``."""
        return self.length // self.d

    @property
    def block_sparsity(self) -> int:
        """``‖x‖_{2,0}``: number of nonzero blocks."""
        return len(self.support)

    def to_numpy(self) -> npt.NDArray[np.float64]:
        return np.asarray(self.values, dtype=np.float64)


class RecoveryResult(BaseModel, frozen=True):
    """
    Output of :func:`~eulersense.recovery.solvers.omp` or
    :func:`~eulersense.recovery.solvers.bomp`.

    ``support`` lists selected columns (OMP) or blocks (BOMP) in selection order.
    """

    estimate: tuple[float, ...] = Field(repr=False)
    support: tuple[int, ...]
    columns: tuple[int, ...]
    residual_norm: float
    iterations: int

    def to_numpy(self) -> npt.NDArray[np.float64]:
        return np.asarray(self.estimate, dtype=np.float64)


class TrialOutcome(BaseModel, frozen=True):
    """One recovery trial."""

    trial: int
    s: int
    support: tuple[int, ...]
    support_match: bool
    max_error: float
    residual_norm: float
    exact: bool
    guaranteed: bool
    error: str | None = None


class SparsityStats(BaseModel, frozen=True):
    """Aggregate over all trials with the same block sparsity ``s``."""

    s: int
    trials: int
    exact_successes: int
    success_rate: float
    guaranteed: bool
    max_error: float
    max_residual: float


class GuaranteeReport(BaseModel, frozen=True):
    """
    Largest block sparsity for which greedy recovery is guaranteed.

    ``s_star`` is the largest integer strictly below ``bound``; ``vacuous``
    means not even ``s = 1`` is covered.
    """

    family: Family
    k: int
    d: int
    t: int
    bound: Rational
    s_star: int
    vacuous: bool
    mu_b: float | None = None
    generic_bound: float | None = None
    generic_s_star: int | None = None


class RecoveryStats(BaseModel, frozen=True):
    """
    Outcome of :func:`~eulersense.recovery.experiment.run_recovery_experiment`.

    ``outcomes`` keeps every trial in order; ``per_sparsity`` aggregates them.
    """

    config: ExperimentConfig
    solver: Solver
    guarantee: GuaranteeReport | None
    trials: int
    exact_successes: int
    max_residual: float
    in_regime_failures: int
    per_sparsity: list[SparsityStats]
    outcomes: list[TrialOutcome] = Field(repr=False)
