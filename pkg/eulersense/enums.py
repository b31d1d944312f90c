"""
Enumerations for eulersense selectors.

String-valued so they round-trip through JSON configs and CLI flags unchanged.
"""

from enum import StrEnum


class Family(StrEnum):
    """
    Combinatorial family a sensing matrix comes from.

    - ES:  Euler Square, ``t = 1``
    - GES: Generalized Euler Square, any ``t ≥ 1``
    """

    ES = "es"
    GES = "ges"


class Solver(StrEnum):
    """
    Greedy recovery algorithm.

    - OMP:  Orthogonal Matching Pursuit (column at a time)
    - BOMP: Block Orthogonal Matching Pursuit (block at a time)
    """

    OMP = "omp"
    BOMP = "bomp"


class ValueDistribution(StrEnum):
    """
    Distribution of the nonzero entries of generated test signals.

    - GAUSSIAN:   standard normal
    - RADEMACHER: ±1 with equal probability
    """

    GAUSSIAN = "gaussian"
    RADEMACHER = "rademacher"


class MatrixFormat(StrEnum):
    """
    On-disk format for a sensing matrix.

    - MATRIX_MARKET: ``.mtx`` coordinate pattern file plus ``.meta.json`` sidecar
    - NATIVE:        ``.phi.json`` column index lists
    """

    MATRIX_MARKET = "mtx"
    NATIVE = "phi-json"


class GramPattern(StrEnum):
    """
    Shape of an integer cross-Gram between two column blocks.

    - ZERO:        all entries zero
    - ALL_ONES:    every entry one
    - HOLLOW_ONES: zero diagonal, ones elsewhere
    - OTHER:       anything else
    """

    ZERO = "zero"
    ALL_ONES = "all_ones"
    HOLLOW_ONES = "hollow_ones"
    OTHER = "other"


class CoherenceMethod(StrEnum):
    """
    How block coherence is computed.

    - AUTO:       structural when the Euler Square hypothesis holds, else numeric
    - STRUCTURAL: closed-form Gram patterns (prime-power Euler Squares only)
    - NUMERIC:    spectral norm of every cross-Gram
    """

    AUTO = "auto"
    STRUCTURAL = "structural"
    NUMERIC = "numeric"


class Axiom(StrEnum):
    """
    Defining axioms of a Generalized Euler Square GES(n, k, t).

    - GES1: every value lies in ``{0, …, n−1}``
    - GES2: tuples from the same column never intersect
    - GES3: tuples from the same row intersect at most ``t − 1`` times
    - GES4: any two distinct tuples intersect at most ``t`` times
    """

    GES1 = "GES1"
    GES2 = "GES2"
    GES3 = "GES3"
    GES4 = "GES4"
