"""
Matrix-free products with Φ and Φᵀ.

:class:`SensingOperator` caches the ``(cols, k)`` row-index array of a
matrix so that solvers calling ``apply``/``adjoint`` many times do not rebuild
it. Summation order is fixed (ascending column, then band), so results are
reproducible bit-for-bit.
"""

import math

import numpy as np
import numpy.typing as npt

from eulersense.errors import DimensionMismatchError, NonFiniteInputError
from eulersense.matrix.models import BinarySensingMatrix

FloatArray = npt.NDArray[np.float64]


def as_vector(values: npt.ArrayLike, expected: int) -> FloatArray:
    vector = np.asarray(values, dtype=np.float64)
    if vector.ndim != 1 or vector.shape[0] != expected:
        raise DimensionMismatchError(expected, int(vector.size))
    if not np.isfinite(vector).all():
        raise NonFiniteInputError()
    return vector


class SensingOperator:
    """
    Linear operator view of a :class:`BinarySensingMatrix`.

    Args:
        matrix: The binary matrix.
        normalized: Apply the ``1/√k`` column scaling.
    """

    def __init__(self, matrix: BinarySensingMatrix, normalized: bool = True) -> None:
        self.matrix = matrix
        self.normalized = normalized
        self.indices = matrix.index_array()
        self.factor = 1.0 / math.sqrt(matrix.k) if normalized else 1.0

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.rows, self.matrix.cols

    def apply(self, x: npt.ArrayLike) -> FloatArray:
        """Return ``Φx``."""
        vector = as_vector(x, self.matrix.cols)
        y = np.zeros(self.matrix.rows, dtype=np.float64)
        np.add.at(y, self.indices.ravel(), np.repeat(vector, self.matrix.k))
        return y * self.factor

    def adjoint(self, y: npt.ArrayLike) -> FloatArray:
        """Return ``Φᵀy``."""
        vector = as_vector(y, self.matrix.rows)
        return vector[self.indices].sum(axis=1) * self.factor

    def submatrix(self, columns: npt.ArrayLike) -> FloatArray:
        """Dense ``rows × len(columns)`` slice of Φ."""
        selected = np.asarray(columns, dtype=np.int64)
        dense = np.zeros((self.matrix.rows, selected.size), dtype=np.float64)
        dense[self.indices[selected], np.arange(selected.size)[:, None]] = self.factor
        return dense

    def __repr__(self) -> str:
        return f"SensingOperator({self.matrix}, normalized={self.normalized})"


def apply(m: BinarySensingMatrix, x: npt.ArrayLike, normalized: bool = False) -> FloatArray:
    """
    Measure a signal: ``y = Φx`` (times ``1/√k`` when ``normalized``).

    Raises:
        DimensionMismatchError: If ``len(x) != cols``.
        NonFiniteInputError: If ``x`` holds NaN or infinity.
    """
    return SensingOperator(m, normalized).apply(x)


def apply_adjoint(m: BinarySensingMatrix, y: npt.ArrayLike, normalized: bool = False) -> FloatArray:
    """
    Back-project a measurement: ``Φᵀy`` (times ``1/√k`` when ``normalized``).

    Raises:
        DimensionMismatchError: If ``len(y) != rows``.
        NonFiniteInputError: If ``y`` holds NaN or infinity.
    """
    return SensingOperator(m, normalized).adjoint(y)
