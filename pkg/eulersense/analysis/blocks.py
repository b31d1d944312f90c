"""
Block structure of Φ: cross-Grams, block orthogonality and block coherence.

Width-``d`` blocks are runs of ``d`` consecutive columns. They are valid when
``d`` divides the native block width ``n``, so that every block lies inside a
single GES column.

Gram quantities are exact integers (shared-row counts of the unscaled
matrix); the ``1/k`` scaling is applied only when reporting coherence.
"""

import logging
from fractions import Fraction
from math import comb

import numpy as np
import numpy.typing as npt

from eulersense.analysis.models import (
    BlockCoherenceReport,
    BlockOrthogonalityReport,
    Rational,
)
from eulersense.analysis.overlap import coherence
from eulersense.analysis.spectral import spectral_norm_sym
from eulersense.enums import CoherenceMethod, GramPattern
from eulersense.errors import (
    BlockPartitionInvalidError,
    HypothesisViolatedError,
    IndexOutOfRangeError,
)
from eulersense.field.arithmetic import is_prime_power
from eulersense.matrix.models import BinarySensingMatrix

logger = logging.getLogger(__name__)

IntArray = npt.NDArray[np.int64]

EQUALITY_TOL = 1e-9
_CHUNK = 256


def check_partition(m: BinarySensingMatrix, d: int) -> int:
    """
    Validate block length ``d`` and return the number of blocks.

    Raises:
        BlockPartitionInvalidError: Unless ``1 ≤ d`` and ``d`` divides the
                                    native block width.
    """
    if d < 1:
        raise BlockPartitionInvalidError(f"Block length must be positive, got d={d}.")
    if m.block_width % d:
        raise BlockPartitionInvalidError(
            f"d={d} does not divide the native block width {m.block_width} of {m}; "
            "blocks would straddle GES columns."
        )
    return m.cols // d


def _overlaps(left: IntArray, right: IntArray) -> IntArray:
    """Shared-row counts between every column of ``left`` and of ``right``."""
    equal = left[..., :, None, :, None] == right[..., None, :, None, :]
    return equal.sum(axis=(-1, -2)).astype(np.int64)


def block_gram(m: BinarySensingMatrix, left: int, right: int, d: int) -> IntArray:
    """
    Unscaled cross-Gram ``M[ℓ, r] = Φ[ℓ]ᵀΦ[r]`` of two width-``d`` blocks.

    Divide by ``k`` for the normalized matrix.

    Raises:
        BlockPartitionInvalidError: If ``d`` is not a valid block length.
        IndexOutOfRangeError: If a block index is outside ``[0, cols/d)``.
    """
    blocks = check_partition(m, d)
    for index in (left, right):
        if not 0 <= index < blocks:
            raise IndexOutOfRangeError(f"Block {index} is outside [0, {blocks - 1}] for d={d}.")
    indices = m.index_array()
    return _overlaps(indices[left * d : (left + 1) * d], indices[right * d : (right + 1) * d])


def verify_block_orthogonality(
    m: BinarySensingMatrix, d: int | None = None
) -> BlockOrthogonalityReport:
    """
    Check that every width-``d`` block has Gram exactly ``k·I``.

    Args:
        m: Matrix to check.
        d: Block length; defaults to the native width ``n``.
    """
    d = m.block_width if d is None else d
    blocks = check_partition(m, d)
    grouped = m.index_array().reshape(blocks, d, m.k)
    expected = m.k * np.eye(d, dtype=np.int64)
    for start in range(0, blocks, _CHUNK):
        grams = _overlaps(grouped[start : start + _CHUNK], grouped[start : start + _CHUNK])
        bad = np.argwhere(grams != expected)
        if bad.size:
            block, i, j = (int(v) for v in bad[0])
            witness = (start + block, i, j, int(grams[block, i, j]))
            logger.warning("%s: block %d is not orthogonal at (%d, %d)", m, witness[0], i, j)
            return BlockOrthogonalityReport(
                d=d, blocks_checked=blocks, passed=False, witness=witness
            )
    return BlockOrthogonalityReport(d=d, blocks_checked=blocks, passed=True)


def classify_gram(g: IntArray) -> GramPattern:
    """Name the shape of an integer cross-Gram."""
    if not g.any():
        return GramPattern.ZERO
    if (g == 1).all():
        return GramPattern.ALL_ONES
    if g.shape[0] == g.shape[1] and g.shape[0] > 1:
        hollow = np.ones_like(g) - np.eye(g.shape[0], dtype=g.dtype)
        if (g == hollow).all():
            return GramPattern.HOLLOW_ONES
    return GramPattern.OTHER


def structural_hypothesis(m: BinarySensingMatrix, d: int) -> bool:
    """
    True when ``m`` is the unmodified Φ(p, p−1, 1) of a prime-power Euler
    Square and ``d | p`` with ``d ≤ p − 1``.

    Under this hypothesis every cross-Gram is zero (same GES column),
    hollow-ones (same row chunk) or all-ones, and ``μ_B = 1/(p−1)``.
    """
    provenance = m.provenance
    return (
        m.t == 1
        and is_prime_power(m.n)
        and m.k == m.n - 1
        and m.block_width == m.n
        and m.n % d == 0
        and d <= m.n - 1
        and provenance is not None
        and not provenance.composed
        and provenance.truncated_from is None
    )


def pattern_norm(pattern: GramPattern, d: int) -> int | None:
    """Exact spectral norm of a d×d cross-Gram with a known pattern, else ``None``."""
    return {
        GramPattern.ZERO: 0,
        GramPattern.HOLLOW_ONES: d - 1,
        GramPattern.ALL_ONES: d,
    }.get(pattern)


def structure_matches(m: BinarySensingMatrix, d: int) -> bool:
    """
    Spot-check the Gram patterns the structural formula assumes.

    Block 0 must meet block 1 (same GES column) in a zero Gram, block ``n/d``
    (same row chunk of the next column) in a hollow-ones Gram, and block
    ``n/d + 1`` in an all-ones Gram. A matrix edited after construction can fail
    this while its provenance still qualifies.
    """
    chunks = m.n // d
    same_chunk = GramPattern.HOLLOW_ONES if d > 1 else GramPattern.ZERO
    expected = {1: GramPattern.ZERO, chunks: same_chunk, chunks + 1: GramPattern.ALL_ONES}
    return all(
        classify_gram(block_gram(m, 0, right, d)) == pattern
        for right, pattern in expected.items()
    )


def _structural(
    m: BinarySensingMatrix, d: int
) -> tuple[dict[GramPattern, int], dict[GramPattern, float]]:
    chunks = m.n // d
    histogram = {
        GramPattern.ZERO: m.n * comb(chunks, 2),
        GramPattern.HOLLOW_ONES: comb(m.n, 2) * chunks,
        GramPattern.ALL_ONES: comb(m.n, 2) * chunks * (chunks - 1),
        GramPattern.OTHER: 0,
    }
    if d == 1:
        # 1×1 hollow blocks are zero
        histogram[GramPattern.ZERO] += histogram[GramPattern.HOLLOW_ONES]
        histogram[GramPattern.HOLLOW_ONES] = 0
    norms = {p: float(pattern_norm(p, d) or 0) for p, count in histogram.items() if count}
    return histogram, norms


def _numeric(
    m: BinarySensingMatrix, d: int, blocks: int
) -> tuple[dict[GramPattern, int], dict[GramPattern, float], float, tuple[int, int] | None]:
    dense = m.to_dense()
    histogram = dict.fromkeys(GramPattern, 0)
    pattern_norms: dict[GramPattern, float] = {}
    norm_cache: dict[bytes, float] = {}
    best_norm, best_pair = -1.0, None
    for left in range(blocks - 1):
        strip = dense[:, left * d : (left + 1) * d].T @ dense[:, (left + 1) * d :]
        grams = np.rint(strip).astype(np.int64).reshape(d, -1, d).transpose(1, 0, 2)
        for offset, gram in enumerate(grams):
            pattern = classify_gram(gram)
            histogram[pattern] += 1
            key = gram.tobytes()
            if key not in norm_cache:
                norm_cache[key] = spectral_norm_sym(gram)
            norm = norm_cache[key]
            pattern_norms[pattern] = max(norm, pattern_norms.get(pattern, 0.0))
            if norm > best_norm + EQUALITY_TOL:
                best_norm, best_pair = norm, (left, left + 1 + offset)
    return histogram, pattern_norms, max(best_norm, 0.0), best_pair


def block_coherence(
    m: BinarySensingMatrix,
    d: int,
    method: CoherenceMethod = CoherenceMethod.AUTO,
) -> BlockCoherenceReport:
    """
    Block coherence of ``m`` (columns scaled by ``1/√k``) for block length ``d``.

    Args:
        m: Matrix to analyse.
        d: Block length; must divide the native block width.
        method: ``STRUCTURAL`` uses the closed-form Gram patterns of prime-power
                Euler Squares, ``NUMERIC`` computes every cross-Gram norm,
                ``AUTO`` picks structural when its hypothesis holds.

    Raises:
        BlockPartitionInvalidError: If ``d`` is not a valid block length.
        HypothesisViolatedError: If ``STRUCTURAL`` is forced outside its hypothesis.
    """
    blocks = check_partition(m, d)
    mu = coherence(m).mu.to_fraction()
    bound = Fraction(m.t, m.k)
    equality = structural_hypothesis(m, d)
    if equality and not structure_matches(m, d):
        logger.warning("%s: provenance qualifies for the closed form but the columns do not", m)
        equality = False

    if method == CoherenceMethod.STRUCTURAL and not equality:
        raise HypothesisViolatedError(
            f"Structural block coherence needs an unmodified prime-power Euler Square with "
            f"k = n − 1 and d | n, d ≤ n − 1; got {m}, d={d}."
        )
    use_structural = method == CoherenceMethod.STRUCTURAL or (
        method == CoherenceMethod.AUTO and equality
    )

    exact: Fraction | None
    if use_structural:
        histogram, pattern_norms = _structural(m, d)
        # d < n, so all-ones pairs exist; the first is block 0 against chunk 1 of GES column 1
        max_norm = float(d)
        exact = Fraction(1, m.k)
        witness = (0, m.n // d + 1)
        used = CoherenceMethod.STRUCTURAL
    else:
        histogram, pattern_norms, max_norm, witness = _numeric(m, d, blocks)
        exact = None
        if witness is not None:
            norm = pattern_norm(classify_gram(block_gram(m, witness[0], witness[1], d)), d)
            if norm is not None:
                exact = Fraction(norm, m.k * d)
        used = CoherenceMethod.NUMERIC

    mu_b = max_norm / (m.k * d)
    within = mu_b <= min(float(mu), float(bound)) + EQUALITY_TOL
    if equality:
        within = within and abs(mu_b - 1.0 / m.k) <= EQUALITY_TOL

    report = BlockCoherenceReport(
        d=d,
        k=m.k,
        t=m.t,
        method=used,
        mu_b=mu_b,
        mu_b_exact=Rational.of(exact) if exact is not None else None,
        mu=Rational.of(mu),
        max_norm=max_norm,
        witness_blocks=witness,
        bound_used=Rational.of(bound),
        equality_case=equality,
        within_bounds=within,
        block_pairs=blocks * (blocks - 1) // 2,
        histogram=histogram,
        pattern_norms=pattern_norms,
    )
    logger.info("%s, d=%d: μ_B = %.6g via %s", m, d, mu_b, used.value)
    return report
