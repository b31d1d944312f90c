"""
Pydantic model for the sparse binary sensing matrix Φ(n, k, t).

Φ has ``nk`` rows and ``n^{t+1}`` columns. Each column is stored as its sorted
list of ``k`` row indices; the matrix is never materialized densely. The
``1/√k`` column normalization is a logical flag applied by operators and
analysis, so every stored quantity stays an exact integer.
"""

import math
from typing import Any

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, Field

from eulersense.errors import InvariantViolationError, ParameterViolationError, ValueOutOfRangeError
from eulersense.ges.models import Provenance


class BinarySensingMatrix(BaseModel, frozen=True):
    """
    Column-major sparse binary matrix with block metadata.

    Columns ``[b·n, (b+1)·n)`` form block ``b`` for ``b`` in ``[0, n^t)``:
    the ``n`` tuples of GES column ``b`` in row order.

    The constructor checks shape and index ranges. Band structure and the
    overlap bound are checked by :func:`~eulersense.matrix.build.build_matrix`
    and certified by the analysis functions, so a hand-edited matrix can still
    be loaded and inspected.

    Args:
        n: Order of the source GES.
        k: Ones per column.
        t: Degree index of the source GES.
        columns: ``n^{t+1}`` sorted tuples of row indices.
        block_width: Width of the native orthonormal blocks (``n``).
        provenance: Construction trace of the source GES, when known.
    """

    n: int = Field(ge=2)
    k: int = Field(ge=1)
    t: int = Field(ge=1)
    columns: tuple[tuple[int, ...], ...] = Field(repr=False)
    block_width: int = Field(ge=1)
    provenance: Provenance | None = None

    def model_post_init(self, __context: Any) -> None:
        if len(self.columns) != self.cols:
            raise ParameterViolationError(
                f"Φ({self.n},{self.k},{self.t}) has {self.cols} columns, got {len(self.columns)}."
            )
        if self.cols % self.block_width:
            raise ParameterViolationError(
                f"Block width {self.block_width} does not divide {self.cols} columns."
            )
        for j, column in enumerate(self.columns):
            if len(column) != self.k:
                raise InvariantViolationError(
                    f"Column {j} has {len(column)} entries, expected {self.k}.", witness=(j,)
                )
            if any(b <= a for a, b in zip(column, column[1:], strict=False)):
                raise InvariantViolationError(
                    f"Column {j} row indices are not strictly increasing: {column}", witness=(j,)
                )
            if column[0] < 0 or column[-1] >= self.rows:
                raise ValueOutOfRangeError(
                    f"Column {j} has a row index outside [0, {self.rows - 1}]: {column}"
                )

    @property
    def rows(self) -> int:
        """Row count ``nk``."""
        return self.n * self.k

    @property
    def cols(self) -> int:
        """Column count ``n^{t+1}``."""
        return int(self.n ** (self.t + 1))

    @property
    def nnz(self) -> int:
        """Number of ones, ``k·n^{t+1}``."""
        return self.k * self.cols

    @property
    def num_blocks(self) -> int:
        """Number of native blocks."""
        return self.cols // self.block_width

    @property
    def scale(self) -> float:
        """Column normalization ``1/√k``."""
        return 1.0 / math.sqrt(self.k)

    @property
    def density(self) -> float:
        """Fraction of nonzero entries, ``1/n``."""
        return self.nnz / (self.rows * self.cols)

    @property
    def aspect_ratio(self) -> float:
        """Columns per row, ``n^t / k``."""
        return self.cols / self.rows

    def index_array(self) -> npt.NDArray[np.int64]:
        """Return the ``(cols, k)`` array of row indices."""
        return np.asarray(self.columns, dtype=np.int64).reshape(self.cols, self.k)

    def band_violation(self) -> int | None:
        """
        First column without exactly one entry in each row band ``[l·n, (l+1)·n)``.

        Returns None when every column is a valid Φ column.
        """
        bands = self.index_array() // self.n
        bad = np.flatnonzero((bands != np.arange(self.k, dtype=np.int64)).any(axis=1))
        return int(bad[0]) if bad.size else None

    def to_dense(self, normalized: bool = False) -> npt.NDArray[np.float64]:
        """
        Materialize Φ as a dense float array.

        Only meant for small matrices in tests and debugging.
        """
        dense = np.zeros((self.rows, self.cols), dtype=np.float64)
        indices = self.index_array()
        dense[indices, np.arange(self.cols)[:, None]] = 1.0
        return dense * self.scale if normalized else dense

    def __str__(self) -> str:
        return f"Φ({self.n},{self.k},{self.t}): {self.rows}×{self.cols}"
