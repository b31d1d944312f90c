"""
Greedy sparse recovery: Orthogonal Matching Pursuit and Block-OMP.

Each iteration selects the column (OMP) or block (BOMP) whose correlation
with the residual has the largest ℓ₂ norm, then re-fits all selected columns
by least squares through the normal equations (Cholesky). Ties go to the
smallest index. Both stop after ``s`` selections, or earlier once the residual
norm drops below ``tol``; with ``s=None`` only the residual stops them.

OMP is BOMP with ``d = 1``, so the two produce identical selections.
"""

import logging

import numpy as np
import numpy.typing as npt
from scipy.linalg import LinAlgError, cho_factor, cho_solve

from eulersense.errors import (
    BlockPartitionInvalidError,
    ParameterViolationError,
    SingularSubproblemError,
)
from eulersense.matrix.models import BinarySensingMatrix
from eulersense.matrix.operator import SensingOperator, as_vector
from eulersense.recovery.models import RecoveryResult

logger = logging.getLogger(__name__)

SOLVER_TOL = 1e-10
# smallest Cholesky pivot, relative to the largest, before the fit counts as singular
_PIVOT_RATIO = 1e-7


def _operator(m: BinarySensingMatrix | SensingOperator) -> SensingOperator:
    return m if isinstance(m, SensingOperator) else SensingOperator(m, normalized=True)


def _least_squares(
    op: SensingOperator, columns: list[int], y: npt.NDArray[np.float64]
) -> npt.NDArray[np.float64]:
    a = op.submatrix(columns)
    gram = a.T @ a
    try:
        factor = cho_factor(gram, lower=True, check_finite=False)
    except LinAlgError as exc:
        raise SingularSubproblemError(
            f"Selected columns {columns} are linearly dependent.", selected=columns
        ) from exc
    pivots = np.abs(np.diag(factor[0]))
    if pivots.min() < _PIVOT_RATIO * pivots.max():
        raise SingularSubproblemError(
            f"Selected columns {columns} are numerically dependent.", selected=columns
        )
    return cho_solve(factor, a.T @ y, check_finite=False)


def _greedy(
    op: SensingOperator,
    y: npt.ArrayLike,
    d: int,
    s: int | None,
    tol: float,
) -> RecoveryResult:
    rows, cols = op.shape
    if d < 1 or cols % d:
        raise BlockPartitionInvalidError(f"Block length {d} does not divide {cols} columns.")
    blocks = cols // d
    if s is not None and not 0 <= s * d <= rows:
        raise ParameterViolationError(f"Cannot select {s} blocks of {d} columns from {rows} rows.")
    measurement = as_vector(y, rows)
    limit = s if s is not None else min(blocks, rows // d)

    residual = measurement.copy()
    chosen: list[int] = []
    columns: list[int] = []
    coefficients = np.zeros(0)
    available = np.ones(blocks, dtype=bool)
    for _ in range(limit):
        if np.linalg.norm(residual) < tol:
            break
        correlation = op.adjoint(residual).reshape(blocks, d)
        scores = np.where(available, np.linalg.norm(correlation, axis=1), -np.inf)
        best = int(np.argmax(scores))
        if scores[best] <= tol:
            break
        chosen.append(best)
        available[best] = False
        columns.extend(range(best * d, (best + 1) * d))
        coefficients = _least_squares(op, columns, measurement)
        residual = measurement - op.submatrix(columns) @ coefficients
        logger.debug("Selected block %d, residual %.3e", best, np.linalg.norm(residual))

    estimate = np.zeros(cols)
    estimate[columns] = coefficients
    return RecoveryResult(
        estimate=tuple(estimate.tolist()),
        support=tuple(chosen),
        columns=tuple(columns),
        residual_norm=float(np.linalg.norm(residual)),
        iterations=len(chosen),
    )


def omp(
    m: BinarySensingMatrix | SensingOperator,
    y: npt.ArrayLike,
    s: int | None = None,
    tol: float = SOLVER_TOL,
) -> RecoveryResult:
    """
    Orthogonal Matching Pursuit on the column-normalized matrix.

    Args:
        m: Sensing matrix, or a prepared operator.
        y: Measurement vector of length ``rows``.
        s: Number of columns to select; ``None`` stops on the residual only.
        tol: Residual norm below which iteration stops.

    Raises:
        DimensionMismatchError: If ``len(y) != rows``.
        SingularSubproblemError: If the selected columns are linearly dependent.
    """
    return _greedy(_operator(m), y, 1, s, tol)


def bomp(
    m: BinarySensingMatrix | SensingOperator,
    y: npt.ArrayLike,
    d: int,
    s: int | None = None,
    tol: float = SOLVER_TOL,
) -> RecoveryResult:
    """
    Block Orthogonal Matching Pursuit over consecutive width-``d`` blocks.

    Args:
        m: Sensing matrix, or a prepared operator.
        y: Measurement vector of length ``rows``.
        d: Block length; must divide the column count.
        s: Number of blocks to select; ``None`` stops on the residual only.
        tol: Residual norm below which iteration stops.

    Raises:
        BlockPartitionInvalidError: If ``d`` does not divide the column count.
        DimensionMismatchError: If ``len(y) != rows``.
        SingularSubproblemError: If the selected columns are linearly dependent.
    """
    return _greedy(_operator(m), y, d, s, tol)
