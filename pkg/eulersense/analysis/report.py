"""
One-call analysis of a sensing matrix against all of its certified bounds.
"""

import logging
import math
from fractions import Fraction

from eulersense.analysis.blocks import block_coherence, verify_block_orthogonality
from eulersense.analysis.bounds import aspect_ratio, column_bound_report, rip_bound
from eulersense.analysis.models import AnalysisReport, MatrixSummary, Rational
from eulersense.analysis.overlap import coherence
from eulersense.enums import CoherenceMethod
from eulersense.matrix.models import BinarySensingMatrix

logger = logging.getLogger(__name__)


def rip_orders(k: int, t: int) -> range:
    """Orders ``k′ = 2 … ⌈k/t⌉`` tabulated in reports."""
    return range(2, math.ceil(Fraction(k, t)) + 1)


def analyze_matrix(
    m: BinarySensingMatrix,
    d: int | None = None,
    method: CoherenceMethod = CoherenceMethod.AUTO,
) -> AnalysisReport:
    """
    Band structure, coherence, RIP table, column bound, aspect ratio and block
    structure of ``m``.

    Block orthogonality is checked at width ``d`` when given, else at the
    native width; block coherence only when ``d`` is given.

    Raises:
        BlockPartitionInvalidError: If ``d`` does not divide the native block width.
        HypothesisViolatedError: If ``method`` is ``STRUCTURAL`` outside its hypothesis.
    """
    summary = MatrixSummary(
        n=m.n,
        k=m.k,
        t=m.t,
        rows=m.rows,
        cols=m.cols,
        nnz=m.nnz,
        density=Rational.of(Fraction(m.k, m.rows)),
        block_width=m.block_width,
    )
    coh = coherence(m)
    rip = [rip_bound(coh.mu, order, m.k, m.t) for order in rip_orders(m.k, m.t)]
    bound = column_bound_report(m)
    orthogonality = verify_block_orthogonality(m, d)
    block = block_coherence(m, d, method) if d is not None else None

    band = m.band_violation()
    failures = []
    if band is not None:
        failures.append(
            f"column {band} does not hold exactly one entry per row band: {list(m.columns[band])}"
        )
    if not coh.certified:
        failures.append(
            f"coherence {coh.mu} exceeds t/k = {coh.bound} at columns {coh.witness_pair}"
        )
    failures.extend(
        f"RIP order {r.order}: δ = {r.delta} is not below 1" for r in rip if not r.valid_regime
    )
    if not bound.within_bound:
        failures.append(f"{bound.columns} columns exceed the bound {bound.bound_exact}")
    if not orthogonality.passed:
        failures.append(
            f"width-{orthogonality.d} blocks are not orthogonal: "
            f"(block, i, j, overlap) = {orthogonality.witness}"
        )
    if block is not None and not block.within_bounds:
        failures.append(
            f"block coherence {block.mu_b:.9g} (d={block.d}) breaks its bound at blocks "
            f"{block.witness_blocks}"
        )
    for failure in failures:
        logger.error("%s: %s", m, failure)

    return AnalysisReport(
        matrix=summary,
        coherence=coh,
        rip=rip,
        column_bound=bound,
        aspect=aspect_ratio(m.n, m.k, m.t),
        block_orthogonality=orthogonality,
        block_coherence=block,
        band_witness=band,
        failures=failures,
    )
