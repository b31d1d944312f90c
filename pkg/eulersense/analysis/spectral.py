"""
Spectral norms of small Gram blocks by cyclic Jacobi iteration.

The largest singular value of ``G`` is the square root of the largest
eigenvalue of the symmetric matrix ``GᵀG``. Jacobi rotations annihilate
off-diagonal entries in a fixed cyclic order (row by row, ``p < q``) until the
off-diagonal Frobenius norm falls below ``tol`` (relative to the matrix norm
once that exceeds one), or ``max_sweeps`` sweeps have run.
"""

import logging
import math

import numpy as np
import numpy.typing as npt

from eulersense.errors import NonFiniteInputError, ParameterViolationError

logger = logging.getLogger(__name__)

MAX_ORDER = 64
JACOBI_TOL = 1e-10
MAX_SWEEPS = 100


def _off_norm(a: npt.NDArray[np.float64]) -> float:
    return float(np.sqrt(np.sum(a * a) - np.sum(np.diag(a) ** 2)))


def jacobi_eigenvalues(
    a: npt.ArrayLike,
    tol: float = JACOBI_TOL,
    max_sweeps: int = MAX_SWEEPS,
) -> npt.NDArray[np.float64]:
    """
    Eigenvalues of a real symmetric matrix, ascending.

    Raises:
        NonFiniteInputError: If ``a`` holds NaN or infinity.
        ParameterViolationError: If ``a`` is not square and symmetric.
    """
    work = np.array(a, dtype=np.float64)
    if work.ndim != 2 or work.shape[0] != work.shape[1]:
        raise ParameterViolationError(f"Expected a square matrix, got shape {work.shape}.")
    if not np.isfinite(work).all():
        raise NonFiniteInputError()
    scale = max(1.0, float(np.abs(work).max(initial=0.0)))
    if not np.allclose(work, work.T, rtol=0.0, atol=1e-12 * scale):
        raise ParameterViolationError("Jacobi iteration needs a symmetric matrix.")

    size = work.shape[0]
    threshold = tol * max(1.0, float(np.linalg.norm(work)))
    for sweep in range(max_sweeps):
        if _off_norm(work) < threshold:
            logger.debug("Jacobi converged after %d sweeps", sweep)
            break
        for p in range(size - 1):
            for q in range(p + 1, size):
                apq = work[p, q]
                if apq == 0.0:
                    continue
                theta = (work[q, q] - work[p, p]) / (2.0 * apq)
                root = math.hypot(theta, 1.0)
                t = 1.0 / (theta + root) if theta >= 0.0 else -1.0 / (-theta + root)
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c

                col_p = work[:, p].copy()
                col_q = work[:, q].copy()
                work[:, p] = c * col_p - s * col_q
                work[:, q] = s * col_p + c * col_q
                row_p = work[p, :].copy()
                row_q = work[q, :].copy()
                work[p, :] = c * row_p - s * row_q
                work[q, :] = s * row_p + c * row_q
                work[p, q] = work[q, p] = 0.0
    else:
        logger.warning(
            "Jacobi stopped after %d sweeps with off-diagonal norm %.3e",
            max_sweeps,
            _off_norm(work),
        )
    return np.sort(np.diag(work))


def spectral_norm_sym(g: npt.ArrayLike) -> float:
    """
    Largest singular value of a small Gram block.

    Example:
        .. code-block:: python

            spectral_norm_sym(np.ones((4, 4)))                 # 4.0
            spectral_norm_sym(np.ones((4, 4)) - np.eye(4))     # 3.0

    Raises:
        ParameterViolationError: If ``g`` is larger than 64×64.
        NonFiniteInputError: If ``g`` holds NaN or infinity.
    """
    matrix = np.array(g, dtype=np.float64)
    if matrix.ndim != 2:
        raise ParameterViolationError(f"Expected a matrix, got shape {matrix.shape}.")
    if max(matrix.shape) > MAX_ORDER:
        raise ParameterViolationError(
            f"Jacobi spectral norm supports blocks up to {MAX_ORDER}, got {matrix.shape}."
        )
    if not np.isfinite(matrix).all():
        raise NonFiniteInputError()
    if matrix.size == 0:
        return 0.0
    eigenvalues = jacobi_eigenvalues(matrix.T @ matrix)
    return math.sqrt(max(float(eigenvalues[-1]), 0.0))
