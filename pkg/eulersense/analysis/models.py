"""
Report models for coherence, RIP, column-count and block analyses.

Quantities that are exact by construction (overlaps, coherence, bounds) are
carried as :class:`Rational` and serialize to ``{"num": …, "den": …}``; only
spectral norms are floating point.
"""

from fractions import Fraction

from pydantic import BaseModel, Field

from eulersense.enums import CoherenceMethod, GramPattern


class Rational(BaseModel, frozen=True):
    """An exact rational number in lowest terms."""

    num: int
    den: int = Field(default=1, gt=0)

    @classmethod
    def of(cls, value: Fraction | int) -> "Rational":
        """Build from a :class:`~fractions.Fraction` or integer."""
        value = Fraction(value)
        return cls(num=value.numerator, den=value.denominator)

    def to_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __float__(self) -> float:
        return self.num / self.den

    def __str__(self) -> str:
        return str(self.num) if self.den == 1 else f"{self.num}/{self.den}"


class CoherenceReport(BaseModel, frozen=True):
    """
    Coherence of a column-normalized binary matrix.

    ``mu = max_overlap / k`` exactly. ``certified`` is ``mu ≤ t/k``.
    """

    k: int
    t: int
    max_overlap: int
    mu: Rational
    bound: Rational
    certified: bool
    witness_pair: tuple[int, int] | None = None
    pairs_checked: int


class RipReport(BaseModel, frozen=True):
    """
    Coherence bound on the RIP constant of order ``order``.

    ``delta = (order − 1)·mu_used``; ``valid_regime`` is ``delta < 1``.
    """

    order: int
    mu_used: Rational
    delta: Rational
    valid_regime: bool
    order_limit: Rational | None = Field(
        default=None, description="k/t + 1 when k and t are known"
    )


class ColumnBoundReport(BaseModel, frozen=True):
    """
    Column count of a matrix against the largest possible for its shape.

    Any binary ``mrows``-row matrix with ``k`` ones per column and pairwise
    overlap at most ``t`` has at most ``C(mrows, t+1) / C(k, t+1)`` columns.
    """

    mrows: int
    k: int
    t: int
    bound: int
    bound_exact: Rational
    columns: int
    within_bound: bool
    ratio: Rational = Field(description="columns / bound_exact")
    ratio_floor: Rational = Field(
        description="(t+1)!/(t+1)^(t+1), a lower bound on ratio for every GES-built matrix"
    )


class AspectReport(BaseModel, frozen=True):
    """Columns per row of Φ(n, k, t) against an Euler Square with the same ``n, k``."""

    rows: int
    cols: int
    ratio: Rational
    euler_square_ratio: Rational
    gain: Rational


class BlockOrthogonalityReport(BaseModel, frozen=True):
    """
    Whether every width-``d`` block has Gram ``k·I`` (identity after scaling).

    ``witness`` is ``(block, i, j, overlap)`` for the first bad entry.
    """

    d: int
    blocks_checked: int
    passed: bool
    witness: tuple[int, int, int, int] | None = None


class BlockCoherenceReport(BaseModel, frozen=True):
    """
    Block coherence ``μ_B = (1/d)·max_{ℓ≠r} σ_max(M[ℓ, r])`` of the scaled matrix.

    ``bound_used`` is ``t/k``: every cross-Gram entry is at most ``t``, so
    ``σ_max ≤ t·d/k``. ``equality_case`` is set when the matrix comes from a
    prime-power Euler Square with ``k = p − 1`` and ``d | p``, where
    ``μ_B = 1/(p−1)`` exactly.
    """

    d: int
    k: int
    t: int
    method: CoherenceMethod
    mu_b: float
    mu_b_exact: Rational | None = None
    mu: Rational
    max_norm: float = Field(description="Largest unscaled cross-Gram spectral norm")
    witness_blocks: tuple[int, int] | None = None
    bound_used: Rational
    equality_case: bool
    within_bounds: bool
    block_pairs: int
    histogram: dict[GramPattern, int]
    pattern_norms: dict[GramPattern, float] = Field(
        default_factory=dict, description="Largest unscaled spectral norm seen per pattern"
    )


class MatrixSummary(BaseModel, frozen=True):
    """Shape and fill of an analysed matrix."""

    n: int
    k: int
    t: int
    rows: int
    cols: int
    nnz: int
    density: Rational
    block_width: int


class AnalysisReport(BaseModel, frozen=True):
    """
    Every certified quantity of one matrix, as produced by
    :func:`~eulersense.analysis.report.analyze_matrix`.

    ``failures`` lists one line per bound that does not hold; it is empty for
    every matrix built from a valid GES.
    """

    matrix: MatrixSummary
    coherence: CoherenceReport
    rip: list[RipReport]
    column_bound: ColumnBoundReport
    aspect: AspectReport
    block_orthogonality: BlockOrthogonalityReport
    block_coherence: BlockCoherenceReport | None = None
    band_witness: int | None = Field(
        default=None, description="First column without exactly one entry per row band"
    )
    failures: list[str] = Field(default_factory=list)

    @property
    def certified(self) -> bool:
        return not self.failures
