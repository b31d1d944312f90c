"""
Sufficient conditions for exact greedy recovery on Φ(n, k, t).

For a matrix with block coherence ``μ_B``, BOMP recovers every block
``s``-sparse signal when ``s < (1/μ_B + d) / (2d)``. Substituting the block
coherence of the constructions gives closed forms:

- Euler Square (``t = 1``):      ``s < (1 + k/d) / 2``,      needs ``d ≤ k``
- Generalized (``t ≥ 1``):       ``s < (1 + k/(d·t)) / 2``,  needs ``d ≤ ⌊k/t⌋``

With ``d = 1`` these reduce to the classical OMP coherence condition.
"""

import math
from fractions import Fraction

from eulersense.analysis.models import Rational
from eulersense.enums import Family
from eulersense.errors import HypothesisViolatedError, ParameterViolationError
from eulersense.recovery.models import GuaranteeReport


def largest_below(bound: Fraction | float) -> int:
    """Largest integer strictly below ``bound``."""
    return math.ceil(bound) - 1


def bomp_guarantee(
    k: int,
    d: int,
    t: int = 1,
    family: Family | None = None,
    mu_b: float | Fraction | None = None,
) -> GuaranteeReport:
    """
    Largest block sparsity ``s*`` with guaranteed BOMP recovery.

    Args:
        k: Tuple length (ones per column).
        d: Block length.
        t: Degree index.
        family: ``ES`` or ``GES``; defaults to ``ES`` when ``t = 1``.
        mu_b: Optional measured block coherence, evaluated in the generic form.

    Example:
        .. code-block:: python

            bomp_guarantee(7, 2).s_star                        # 2
            bomp_guarantee(4, 2, t=2, family=Family.GES).s_star  # 0, vacuous

    Raises:
        ParameterViolationError: If ``k``, ``d`` or ``t`` is not positive,
                                 ``ES`` is paired with ``t > 1``, or ``mu_b ≤ 0``.
        HypothesisViolatedError: If ``d > k`` (ES) or ``d > ⌊k/t⌋`` (GES).
    """
    if k < 1 or d < 1 or t < 1:
        raise ParameterViolationError(f"k, d and t must be positive, got k={k}, d={d}, t={t}.")
    family = family or (Family.ES if t == 1 else Family.GES)
    if family == Family.ES:
        if t != 1:
            raise ParameterViolationError(f"Euler Squares have t = 1, got t={t}.")
        if d > k:
            raise HypothesisViolatedError(
                f"The Euler Square guarantee needs d ≤ k, got d={d}, k={k}."
            )
        bound = (1 + Fraction(k, d)) / 2
    else:
        if d > k // t:
            raise HypothesisViolatedError(
                f"The GES guarantee needs d ≤ ⌊k/t⌋ = {k // t}, got d={d}."
            )
        bound = (1 + Fraction(k, d * t)) / 2

    generic_bound = generic_s_star = None
    if mu_b is not None:
        if mu_b <= 0:
            raise ParameterViolationError(f"Block coherence must be positive, got {mu_b}.")
        generic_bound = float((1 / Fraction(mu_b) + d) / (2 * d))
        generic_s_star = largest_below(generic_bound)

    s_star = largest_below(bound)
    return GuaranteeReport(
        family=family,
        k=k,
        d=d,
        t=t,
        bound=Rational.of(bound),
        s_star=s_star,
        vacuous=s_star < 1,
        mu_b=float(mu_b) if mu_b is not None else None,
        generic_bound=generic_bound,
        generic_s_star=generic_s_star,
    )
