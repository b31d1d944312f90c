"""
Row-wise pair accumulation for column overlaps of sparse binary matrices.

Instead of comparing every pair of columns, walk the rows: for each row, every
pair of columns incident to it gains one shared entry. Total work is
Σ_rows C(deg(row), 2), far below C(cols, 2)·k for the matrices built here.

Counters live in a dense upper triangle when ``cols ≤ DENSE_LIMIT`` and in a
dict keyed by ``i * cols + j`` otherwise. Ties on the maximum resolve to the
lexicographically smallest pair ``(i, j)``.
"""

import logging
from typing import NamedTuple

import numpy as np
import numpy.typing as npt

logger = logging.getLogger(__name__)

DENSE_LIMIT = 4096


class OverlapResult(NamedTuple):
    """Largest overlap between two distinct columns and the pair attaining it."""

    count: int
    witness: tuple[int, int] | None


def incident_columns(indices: npt.NDArray[np.int64]) -> list[npt.NDArray[np.int64]]:
    """
    Group column numbers by the row they touch.

    Args:
        indices: ``(cols, k)`` array of row indices per column.

    Returns:
        One ascending array of column numbers per nonempty row.
    """
    cols, k = indices.shape
    flat_rows = indices.ravel()
    flat_cols = np.repeat(np.arange(cols, dtype=np.int64), k)
    order = np.argsort(flat_rows, kind="stable")
    sorted_rows = flat_rows[order]
    sorted_cols = flat_cols[order]
    boundaries = np.flatnonzero(np.diff(sorted_rows)) + 1
    return np.split(sorted_cols, boundaries)


def _dense_max(groups: list[npt.NDArray[np.int64]], cols: int, k: int) -> OverlapResult:
    dtype = np.int16 if k < np.iinfo(np.int16).max else np.int32
    counts = np.zeros((cols, cols), dtype=dtype)
    for group in groups:
        if group.size > 1:
            counts[np.ix_(group, group)] += 1
    counts[np.tri(cols, dtype=bool)] = -1
    flat = int(np.argmax(counts))
    i, j = divmod(flat, cols)
    return OverlapResult(int(counts[i, j]), (i, j))


def _hashed_max(groups: list[npt.NDArray[np.int64]], cols: int) -> OverlapResult:
    counter: dict[int, int] = {}
    for group in groups:
        size = group.size
        if size < 2:
            continue
        upper_i, upper_j = np.triu_indices(size, 1)
        keys = group[upper_i] * cols + group[upper_j]
        for key in keys.tolist():
            counter[key] = counter.get(key, 0) + 1
    if not counter:
        return OverlapResult(0, (0, 1))
    best_count = max(counter.values())
    best_key = min(key for key, count in counter.items() if count == best_count)
    i, j = divmod(best_key, cols)
    return OverlapResult(best_count, (i, j))


def max_pair_overlap(
    indices: npt.NDArray[np.int64],
    dense_limit: int = DENSE_LIMIT,
) -> OverlapResult:
    """
    Return the maximum number of shared rows over all distinct column pairs.

    Args:
        indices: ``(cols, k)`` array of row indices per column.
        dense_limit: Largest column count that uses the dense counter.

    Returns:
        :class:`OverlapResult`; ``witness`` is ``None`` for fewer than two columns.
    """
    cols, k = indices.shape
    if cols < 2:
        return OverlapResult(0, None)
    groups = incident_columns(indices)
    if cols <= dense_limit:
        logger.debug("Dense overlap accumulation over %d columns", cols)
        return _dense_max(groups, cols, k)
    logger.debug("Hashed overlap accumulation over %d columns", cols)
    return _hashed_max(groups, cols)
