"""
Assembly of Φ(n, k, t) from a GES array.

Tuple ``(t_0, …, t_{k−1})`` becomes the column with ones at rows
``l·n + t_l``: one per row band ``[l·n, (l+1)·n)``. Columns are laid out block
by block, block ``b`` holding the ``n`` tuples of GES column ``b``.
"""

import logging
from collections.abc import Sequence

import numpy as np
import numpy.typing as npt

from eulersense._internal.pairs import max_pair_overlap
from eulersense.errors import InvariantViolationError, LengthMismatchError, ValueOutOfRangeError
from eulersense.ges.models import GesArray, KTuple
from eulersense.matrix.models import BinarySensingMatrix

logger = logging.getLogger(__name__)


def column_vector(tup: KTuple | Sequence[int], n: int, k: int) -> list[int]:
    """
    Row indices of the column built from one k-tuple.

    Example:
        .. code-block:: python

            column_vector((1, 2), n=3, k=2)   # [1, 5]

    Raises:
        LengthMismatchError: If the tuple does not have ``k`` entries.
        ValueOutOfRangeError: If a value lies outside ``[0, n−1]``.
    """
    values = tup.values if isinstance(tup, KTuple) else tuple(tup)
    if len(values) != k:
        raise LengthMismatchError(f"Expected a {k}-tuple, got {values}.")
    for value in values:
        if not 0 <= value < n:
            raise ValueOutOfRangeError(f"Tuple value {value} is outside [0, {n - 1}]: {values}")
    return [band * n + value for band, value in enumerate(values)]


def _check_blocks(indices: npt.NDArray[np.int64], n: int) -> None:
    blocks = indices.reshape(-1, n, indices.shape[1])
    ordered = np.sort(blocks, axis=1)
    clashes = np.argwhere(ordered[:, 1:, :] == ordered[:, :-1, :])
    if clashes.size:
        block, _, band = (int(v) for v in clashes[0])
        members = np.flatnonzero(blocks[block, :, band] == ordered[block, clashes[0][1], band])
        first, second = (block * n + int(m) for m in members[:2])
        raise InvariantViolationError(
            f"Columns {first} and {second} of block {block} share a row.",
            witness=(first, second),
        )


def build_matrix(g: GesArray, *, verify: bool = True) -> BinarySensingMatrix:
    """
    Build the binary sensing matrix of ``g``.

    Args:
        g: Source array; expected to satisfy GES 1–4.
        verify: Also certify that no two columns overlap in more than ``t``
                rows (the row-wise pair count; skip for very large matrices).

    Returns:
        ``nk × n^{t+1}`` :class:`BinarySensingMatrix` with block width ``n``.

    Raises:
        ValueOutOfRangeError: If ``g`` holds a value outside ``[0, n−1]``.
        InvariantViolationError: If a native block is not disjoint or an
                                 overlap exceeds ``t``; ``witness`` is the
                                 column pair.
    """
    values = g.to_numpy()
    if values.min() < 0 or values.max() >= g.n:
        raise ValueOutOfRangeError(f"GES({g.n},{g.k},{g.t}) holds values outside [0, {g.n - 1}].")

    # (row, col, k) -> (col, row, k): block b is GES column b in row order
    indices = values.transpose(1, 0, 2).reshape(-1, g.k) + np.arange(g.k, dtype=np.int64) * g.n
    _check_blocks(indices, g.n)

    if verify:
        overlap = max_pair_overlap(indices)
        if overlap.count > g.t:
            raise InvariantViolationError(
                f"Columns {overlap.witness} share {overlap.count} rows, more than t={g.t}.",
                witness=overlap.witness,
            )

    matrix = BinarySensingMatrix(
        n=g.n,
        k=g.k,
        t=g.t,
        columns=tuple(tuple(column) for column in indices.tolist()),
        block_width=g.n,
        provenance=g.provenance,
    )
    logger.info("Built %s with %d blocks of width %d", matrix, matrix.num_blocks, g.n)
    return matrix
