"""
Column overlaps and coherence of binary sensing matrices.
"""

import logging
from fractions import Fraction
from itertools import combinations

from eulersense._internal.pairs import DENSE_LIMIT, OverlapResult, max_pair_overlap
from eulersense.analysis.models import CoherenceReport, Rational
from eulersense.matrix.models import BinarySensingMatrix

logger = logging.getLogger(__name__)


def max_overlap(m: BinarySensingMatrix, dense_limit: int = DENSE_LIMIT) -> OverlapResult:
    """
    Largest number of rows shared by two distinct columns.

    Uses row-wise pair accumulation; the witness is the lexicographically
    smallest pair attaining the maximum.
    """
    return max_pair_overlap(m.index_array(), dense_limit=dense_limit)


def naive_max_overlap(m: BinarySensingMatrix) -> OverlapResult:
    """Pairwise reference implementation of :func:`max_overlap`."""
    if m.cols < 2:
        return OverlapResult(0, None)
    sets = [frozenset(column) for column in m.columns]
    best = OverlapResult(-1, None)
    for i, j in combinations(range(m.cols), 2):
        shared = len(sets[i] & sets[j])
        if shared > best.count:
            best = OverlapResult(shared, (i, j))
    return best


def coherence(m: BinarySensingMatrix) -> CoherenceReport:
    """
    Coherence ``μ = max_overlap / k`` of ``m`` with columns scaled by ``1/√k``.

    The report is certified when ``μ ≤ t/k``.

    Example:
        .. code-block:: python

            report = coherence(build_matrix(construct_es(7, 6)))
            str(report.mu)   # '1/6'
    """
    overlap = max_overlap(m)
    mu = Fraction(overlap.count, m.k)
    bound = Fraction(m.t, m.k)
    report = CoherenceReport(
        k=m.k,
        t=m.t,
        max_overlap=overlap.count,
        mu=Rational.of(mu),
        bound=Rational.of(bound),
        certified=mu <= bound,
        witness_pair=overlap.witness,
        pairs_checked=m.cols * (m.cols - 1) // 2,
    )
    if not report.certified:
        logger.warning(
            "%s: coherence %s exceeds t/k = %s at columns %s", m, mu, bound, overlap.witness
        )
    return report
