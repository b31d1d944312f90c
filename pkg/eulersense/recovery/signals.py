"""
Seeded generation of block-sparse test signals.

Supports are uniform ``s``-subsets of the ``M/d`` blocks (partial
Fisher–Yates over :class:`~eulersense._internal.rng.SplitMix64` with rejection
sampling); nonzero entries are standard normal or ±1.
"""

from collections.abc import Sequence

from eulersense._internal.rng import SplitMix64
from eulersense.enums import ValueDistribution
from eulersense.errors import ParameterViolationError
from eulersense.recovery.models import BlockSparseSignal


def fill_blocks(
    length: int,
    d: int,
    support: Sequence[int],
    value_dist: ValueDistribution,
    rng: SplitMix64,
) -> BlockSparseSignal:
    """Draw nonzero values for the given block support."""
    values = [0.0] * length
    for block in sorted(support):
        for offset in range(d):
            if value_dist == ValueDistribution.RADEMACHER:
                value = rng.sign()
            else:
                value = rng.standard_normal()
                while value == 0.0:
                    value = rng.standard_normal()
            values[block * d + offset] = value
    return BlockSparseSignal(
        length=length, d=d, support=tuple(sorted(support)), values=tuple(values)
    )


def gen_block_sparse(
    length: int,
    d: int,
    s: int,
    value_dist: ValueDistribution = ValueDistribution.GAUSSIAN,
    seed: int = 0,
    stream: int = 0,
) -> BlockSparseSignal:
    """
    Generate a block ``s``-sparse signal of length ``length``.

    Args:
        length: Signal length ``M``.
        d: Block length; must divide ``M``.
        s: Number of nonzero blocks, ``0 ≤ s ≤ M/d``.
        value_dist: Distribution of the nonzero entries.
        seed: Base seed.
        stream: Stream index; experiments pass the trial number.

    Raises:
        ParameterViolationError: If ``d`` does not divide ``M`` or ``s`` is out of range.
    """
    if d < 1 or length % d:
        raise ParameterViolationError(f"Block length {d} does not divide {length}.")
    blocks = length // d
    if not 0 <= s <= blocks:
        raise ParameterViolationError(f"Block sparsity {s} is outside [0, {blocks}].")
    rng = SplitMix64.for_stream(seed, stream)
    support = rng.sample(blocks, s)
    return fill_blocks(length, d, support, value_dist, rng)
