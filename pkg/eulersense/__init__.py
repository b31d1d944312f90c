"""
eulersense: deterministic binary compressed-sensing matrices from Euler Squares.

Builds Euler Squares ES(n, k) and Generalized Euler Squares GES(n, k, t) by
evaluating polynomials over finite fields, turns them into sparse binary
sensing matrices Φ(n, k, t) of size ``nk × n^{t+1}``, certifies their coherence
and block structure, and recovers block-sparse signals with OMP and Block-OMP.

Example usage:
    from eulersense import build_matrix, coherence, construct_ges

    phi = build_matrix(construct_ges(20, 3, 2))
    report = coherence(phi)
    print(phi, report.mu, report.certified)     # Φ(20,3,2): 60×8000 2/3 True

Example usage, block-sparse recovery:
    from eulersense import ExperimentConfig, run_recovery_experiment

    config = ExperimentConfig(n=8, k=7, d=2, s=2, exhaustive=True, seed=42)
    stats = run_recovery_experiment(config)
    print(stats.exact_successes, stats.trials)  # 496 496
"""

from eulersense.analysis import (
    AnalysisReport,
    BlockCoherenceReport,
    CoherenceReport,
    Rational,
    analyze_matrix,
    block_coherence,
    coherence,
    max_column_bound,
    rip_bound,
    verify_block_orthogonality,
)
from eulersense.enums import (
    Axiom,
    CoherenceMethod,
    Family,
    GramPattern,
    MatrixFormat,
    Solver,
    ValueDistribution,
)
from eulersense.errors import (
    BlockPartitionInvalidError,
    CertificationError,
    DimensionMismatchError,
    DivisionByZeroError,
    EulerSenseError,
    GuaranteeViolationError,
    HypothesisViolatedError,
    IndexOutOfRangeError,
    InvariantViolationError,
    LengthMismatchError,
    MetadataMismatchError,
    NonFiniteInputError,
    NotPrimePowerError,
    ParameterViolationError,
    ParseError,
    SingularSubproblemError,
    ValueOutOfRangeError,
)
from eulersense.field import FieldElement, FieldSpec, make_field
from eulersense.ges import (
    AxiomReport,
    GesArray,
    GesParams,
    KTuple,
    construct_es,
    construct_ges,
    export_ges,
    import_ges,
    verify_ges,
)
from eulersense.matrix import (
    BinarySensingMatrix,
    SensingOperator,
    build_matrix,
    export_matrix,
    import_matrix,
)
from eulersense.recovery import (
    BlockSparseSignal,
    ExperimentConfig,
    RecoveryResult,
    RecoveryStats,
    bomp,
    bomp_guarantee,
    gen_block_sparse,
    omp,
    run_recovery_experiment,
)

__version__ = "0.1.0"

__all__ = [
    # Fields
    "FieldSpec",
    "FieldElement",
    "make_field",
    # GES
    "KTuple",
    "GesArray",
    "GesParams",
    "AxiomReport",
    "construct_es",
    "construct_ges",
    "verify_ges",
    "export_ges",
    "import_ges",
    # Matrices
    "BinarySensingMatrix",
    "SensingOperator",
    "build_matrix",
    "export_matrix",
    "import_matrix",
    # Analysis
    "Rational",
    "CoherenceReport",
    "BlockCoherenceReport",
    "AnalysisReport",
    "coherence",
    "rip_bound",
    "max_column_bound",
    "verify_block_orthogonality",
    "block_coherence",
    "analyze_matrix",
    # Recovery
    "BlockSparseSignal",
    "RecoveryResult",
    "RecoveryStats",
    "ExperimentConfig",
    "gen_block_sparse",
    "omp",
    "bomp",
    "bomp_guarantee",
    "run_recovery_experiment",
    # Enums
    "Family",
    "Solver",
    "ValueDistribution",
    "MatrixFormat",
    "GramPattern",
    "CoherenceMethod",
    "Axiom",
    # Errors
    "EulerSenseError",
    "NotPrimePowerError",
    "DivisionByZeroError",
    "ParameterViolationError",
    "LengthMismatchError",
    "ValueOutOfRangeError",
    "InvariantViolationError",
    "DimensionMismatchError",
    "ParseError",
    "MetadataMismatchError",
    "BlockPartitionInvalidError",
    "IndexOutOfRangeError",
    "NonFiniteInputError",
    "SingularSubproblemError",
    "HypothesisViolatedError",
    "GuaranteeViolationError",
    "CertificationError",
]
