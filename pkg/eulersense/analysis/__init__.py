"""
Certified guarantees of binary sensing matrices: coherence, RIP bound,
column-count bound, block orthogonality and block coherence.
"""

from eulersense.analysis.blocks import (
    block_coherence,
    block_gram,
    check_partition,
    classify_gram,
    pattern_norm,
    structural_hypothesis,
    verify_block_orthogonality,
)
from eulersense.analysis.bounds import (
    aspect_ratio,
    column_bound_report,
    max_column_bound,
    ratio_floor,
    rip_bound,
)
from eulersense.analysis.models import (
    AnalysisReport,
    AspectReport,
    BlockCoherenceReport,
    BlockOrthogonalityReport,
    CoherenceReport,
    ColumnBoundReport,
    MatrixSummary,
    Rational,
    RipReport,
)
from eulersense.analysis.overlap import coherence, max_overlap, naive_max_overlap
from eulersense.analysis.report import analyze_matrix, rip_orders
from eulersense.analysis.spectral import jacobi_eigenvalues, spectral_norm_sym

__all__ = [
    "Rational",
    "CoherenceReport",
    "RipReport",
    "ColumnBoundReport",
    "AspectReport",
    "BlockOrthogonalityReport",
    "BlockCoherenceReport",
    "MatrixSummary",
    "AnalysisReport",
    "max_overlap",
    "naive_max_overlap",
    "coherence",
    "rip_bound",
    "max_column_bound",
    "column_bound_report",
    "ratio_floor",
    "aspect_ratio",
    "check_partition",
    "block_gram",
    "classify_gram",
    "pattern_norm",
    "structural_hypothesis",
    "verify_block_orthogonality",
    "block_coherence",
    "jacobi_eigenvalues",
    "spectral_norm_sym",
    "rip_orders",
    "analyze_matrix",
]
