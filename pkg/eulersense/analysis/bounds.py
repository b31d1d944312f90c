"""
Closed-form bounds: RIP constant from coherence, maximum column count, aspect ratio.

All arithmetic is exact (:class:`fractions.Fraction` and integer binomials).
"""

from fractions import Fraction
from math import comb, factorial

from eulersense.analysis.models import AspectReport, ColumnBoundReport, Rational, RipReport
from eulersense.errors import ParameterViolationError
from eulersense.matrix.models import BinarySensingMatrix


def _fraction(value: Fraction | Rational | int) -> Fraction:
    return value.to_fraction() if isinstance(value, Rational) else Fraction(value)


def rip_bound(
    mu: Fraction | Rational | int,
    order: int,
    k: int | None = None,
    t: int | None = None,
) -> RipReport:
    """
    RIP constant bound ``δ = (order − 1)·μ``.

    Args:
        mu: Coherence of the normalized matrix.
        order: Sparsity order ``k′ ≥ 1``.
        k: Tuple length, to report the limit ``k′ < k/t + 1``.
        t: Degree index, to report the limit ``k′ < k/t + 1``.

    Raises:
        ParameterViolationError: If ``order < 1``.
    """
    if order < 1:
        raise ParameterViolationError(f"RIP order must be at least 1, got {order}.")
    mu_used = _fraction(mu)
    delta = (order - 1) * mu_used
    limit = Rational.of(Fraction(k, t) + 1) if k is not None and t is not None else None
    return RipReport(
        order=order,
        mu_used=Rational.of(mu_used),
        delta=Rational.of(delta),
        valid_regime=delta < 1,
        order_limit=limit,
    )


def _check_shape(mrows: int, k: int, t: int) -> None:
    if not (t >= 1 and mrows >= k >= t + 1):
        raise ParameterViolationError(
            f"Column bound needs mrows ≥ k ≥ t + 1 ≥ 2, got mrows={mrows}, k={k}, t={t}."
        )


def max_column_bound(mrows: int, k: int, t: int) -> int:
    """
    Largest column count ``⌊C(mrows, t+1) / C(k, t+1)⌋`` of a binary matrix
    with ``k`` ones per column and pairwise overlap at most ``t``.

    Raises:
        ParameterViolationError: Unless ``mrows ≥ k ≥ t + 1``.
    """
    _check_shape(mrows, k, t)
    return comb(mrows, t + 1) // comb(k, t + 1)


def ratio_floor(t: int) -> Fraction:
    """``(t+1)! / (t+1)^{t+1}``: ``n^{t+1}`` over the column bound never drops below this."""
    return Fraction(factorial(t + 1), (t + 1) ** (t + 1))


def column_bound_report(m: BinarySensingMatrix) -> ColumnBoundReport:
    """Compare the column count of ``m`` with :func:`max_column_bound`."""
    _check_shape(m.rows, m.k, m.t)
    exact = Fraction(comb(m.rows, m.t + 1), comb(m.k, m.t + 1))
    return ColumnBoundReport(
        mrows=m.rows,
        k=m.k,
        t=m.t,
        bound=exact.numerator // exact.denominator,
        bound_exact=Rational.of(exact),
        columns=m.cols,
        within_bound=m.cols <= exact,
        ratio=Rational.of(m.cols / exact),
        ratio_floor=Rational.of(ratio_floor(m.t)),
    )


def aspect_ratio(n: int, k: int, t: int) -> AspectReport:
    """
    Aspect ratio ``n^{t+1} / (nk)`` of Φ(n, k, t) next to the Euler Square ratio ``n² / (nk)``.

    The gain ``n^{t−1}`` is what raising the degree buys at equal row count.
    """
    rows = n * k
    cols = n ** (t + 1)
    ratio = Fraction(cols, rows)
    es_ratio = Fraction(n * n, rows)
    return AspectReport(
        rows=rows,
        cols=cols,
        ratio=Rational.of(ratio),
        euler_square_ratio=Rational.of(es_ratio),
        gain=Rational.of(ratio / es_ratio),
    )
