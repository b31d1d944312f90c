"""
Brute-force verification of the GES axioms.

Every unordered pair of the ``n^{t+1}`` tuples is classified as same-row,
same-column or cross, and its intersection count folded into running maxima.
The pair space is split across workers (see
:class:`~eulersense._internal.workers.WorkerSettings`); maxima reduce with the
lexicographically smallest pair winning ties, so the report does not depend on
the worker count.

For large orders ``sample_pairs`` caps the work at a seeded random sample.
"""

import logging
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from eulersense._internal.workers import WorkerSettings
from eulersense.ges.models import AxiomReport, CellRef, GesArray, PairWitness

logger = logging.getLogger(__name__)

IntArray = npt.NDArray[np.int64]

_KINDS = ("same_row", "same_column", "cross", "overall")


@dataclass
class _PairMax:
    value: int = -1
    pair: tuple[int, int] = (0, 0)

    def offer(self, value: int, pair: tuple[int, int]) -> None:
        if value > self.value or (value == self.value and pair < self.pair):
            self.value = value
            self.pair = pair

    def merge(self, other: "_PairMax") -> None:
        if other.value >= 0:
            self.offer(other.value, other.pair)


@dataclass
class _Scan:
    maxima: dict[str, _PairMax] = field(
        default_factory=lambda: {kind: _PairMax() for kind in _KINDS}
    )
    pairs: int = 0

    def merge(self, other: "_Scan") -> None:
        for kind in _KINDS:
            self.maxima[kind].merge(other.maxima[kind])
        self.pairs += other.pairs


def _fold(
    scan: _Scan,
    counts: IntArray,
    first: IntArray,
    second: IntArray,
    same_row: npt.NDArray[np.bool_],
    same_col: npt.NDArray[np.bool_],
) -> None:
    masks = {
        "same_row": same_row,
        "same_column": same_col,
        "cross": ~same_row & ~same_col,
        "overall": np.ones_like(same_row),
    }
    for kind, mask in masks.items():
        if not mask.any():
            continue
        selected = counts[mask]
        best = int(selected.max())
        hits = np.flatnonzero(selected == best)
        candidates = sorted(
            zip(first[mask][hits].tolist(), second[mask][hits].tolist(), strict=True)
        )
        scan.maxima[kind].offer(best, candidates[0])
    scan.pairs += int(counts.size)


def _scan_rows(flat: IntArray, ncols: int, start: int, stop: int) -> _Scan:
    scan = _Scan()
    total = flat.shape[0]
    for i in range(start, stop):
        if i + 1 >= total:
            break
        others = np.arange(i + 1, total)
        counts = (flat[i + 1 :] == flat[i]).sum(axis=1)
        same_row = others // ncols == i // ncols
        same_col = others % ncols == i % ncols
        _fold(scan, counts, np.full_like(others, i), others, same_row, same_col)
    return scan


def _scan_sample(flat: IntArray, ncols: int, sample_pairs: int, seed: int) -> _Scan:
    scan = _Scan()
    total = flat.shape[0]
    rng = np.random.default_rng(seed)
    remaining = sample_pairs
    while remaining > 0:
        batch = min(remaining, 1_000_000)
        left = rng.integers(0, total, size=batch)
        right = rng.integers(0, total, size=batch)
        keep = left != right
        first = np.minimum(left, right)[keep]
        second = np.maximum(left, right)[keep]
        counts = (flat[first] == flat[second]).sum(axis=1)
        same_row = first // ncols == second // ncols
        same_col = first % ncols == second % ncols
        _fold(scan, counts, first, second, same_row, same_col)
        remaining -= batch
    return scan


def _witness(best: _PairMax, ncols: int) -> PairWitness:
    i, j = best.pair
    return PairWitness(
        first=CellRef(row=i // ncols, col=i % ncols),
        second=CellRef(row=j // ncols, col=j % ncols),
        intersections=best.value,
    )


def verify_ges(
    g: GesArray,
    *,
    sample_pairs: int | None = None,
    seed: int = 0,
    workers: WorkerSettings | None = None,
) -> AxiomReport:
    """
    Check axioms GES 1–4 on ``g``.

    Args:
        g: The array to check.
        sample_pairs: When set and smaller than the number of pairs, check this
                      many random pairs instead of all of them.
        seed: Seed for pair sampling.
        workers: Worker settings for the exhaustive scan.

    Returns:
        :class:`~eulersense.ges.models.AxiomReport`. Violations are reported,
        never raised.
    """
    values = g.to_numpy()
    n, ncols, k = values.shape
    flat = values.reshape(-1, k)
    total = flat.shape[0]

    in_range = (flat >= 0) & (flat < n)
    range_witness = None
    if not in_range.all():
        bad = int(np.flatnonzero(~in_range.all(axis=1))[0])
        range_witness = CellRef(row=bad // ncols, col=bad % ncols)

    permutations = bool(
        (np.sort(values, axis=0) == np.arange(n, dtype=np.int64)[:, None, None]).all()
    )

    pair_space = total * (total - 1) // 2
    sampled = sample_pairs is not None and sample_pairs < pair_space
    if sampled:
        assert sample_pairs is not None
        scan = _scan_sample(flat, ncols, sample_pairs, seed)
    else:
        settings = workers or WorkerSettings()
        chunks = max(1, min(settings.workers * 4, total))
        bounds = np.linspace(0, total, chunks + 1, dtype=np.int64).tolist()
        scan = _Scan()
        parts = settings.map(
            lambda span: _scan_rows(flat, ncols, span[0], span[1]),
            list(zip(bounds[:-1], bounds[1:], strict=True)),
        )
        for part in parts:
            scan.merge(part)

    maxima = scan.maxima
    same_row_ok = maxima["same_row"].value <= g.t - 1
    same_column_ok = maxima["same_column"].value <= 0
    overall_ok = maxima["overall"].value <= g.t

    witnesses = {
        kind: _witness(best, ncols) for kind, best in maxima.items() if best.value >= 0
    }
    report = AxiomReport(
        n=n,
        k=k,
        t=g.t,
        range_ok=range_witness is None,
        same_column_ok=same_column_ok,
        same_row_ok=same_row_ok,
        overall_ok=overall_ok,
        max_same_row=maxima["same_row"].value,
        max_same_column=maxima["same_column"].value,
        max_cross=maxima["cross"].value,
        max_overall=maxima["overall"].value,
        range_witness=range_witness,
        witnesses=witnesses,
        columns_are_permutations=permutations,
        pairs_checked=scan.pairs,
        sampled=sampled,
    )
    logger.info(
        "Verified GES(%d,%d,%d): %s (%d pairs%s)",
        n,
        k,
        g.t,
        "pass" if report.passed else f"fail {report.failed_axioms}",
        scan.pairs,
        ", sampled" if sampled else "",
    )
    return report
