"""
Construction of Euler Squares and Generalized Euler Squares.

Prime-power orders ``q`` are built by polynomial evaluation over GF(q):

- columns are the ``q^t`` polynomials of degree ≤ t with zero constant term,
  enumerated by coefficient vector ``(c_1, …, c_t)`` with ``c_1`` fastest
  (``0, x, 2x, …``);
- row ``j`` of column ``P`` is ``P + f_j`` evaluated at ``S_k = (f_1, …, f_k)``,
  the first ``k`` nonzero elements, with values written as canonical indices.

Composite orders are folded together from their prime-power components by
mixed-radix composition of values, rows and columns.
"""

import logging
from collections.abc import Callable
from functools import reduce

import numpy as np
import numpy.typing as npt

from eulersense.errors import LengthMismatchError, ParameterViolationError
from eulersense.field.arithmetic import galois_field, make_field
from eulersense.ges.models import GesArray, KTuple, Provenance
from eulersense.ges.params import GesParams

logger = logging.getLogger(__name__)

IntArray = npt.NDArray[np.int64]
Combiner = Callable[[IntArray, IntArray, int], IntArray]


def intersection(a: KTuple, b: KTuple) -> int:
    """
    Count the coordinates where two k-tuples agree.

    Raises:
        LengthMismatchError: If the tuples differ in length.
    """
    if a.k != b.k:
        raise LengthMismatchError(f"Cannot intersect a {a.k}-tuple with a {b.k}-tuple.")
    return sum(1 for x, y in zip(a.values, b.values, strict=True) if x == y)


def column_coefficients(col: int, q: int, t: int) -> list[int]:
    """Coefficients ``(0, c_1, …, c_t)`` of the polynomial heading column ``col``."""
    coeffs = [0]
    for _ in range(t):
        col, digit = divmod(col, q)
        coeffs.append(digit)
    return coeffs


def construct_prime_power_ges(q: int, k: int, t: int) -> GesArray:
    """
    Build GES(q, k, t) for a prime power ``q`` by polynomial evaluation.

    Args:
        q: Prime-power order.
        k: Tuple length, ``t < k ≤ q − 1``.
        t: Maximum polynomial degree.

    Returns:
        A ``q × q^t`` :class:`GesArray`.

    Raises:
        NotPrimePowerError: If ``q`` is not a prime power.
        ParameterViolationError: If ``t < k ≤ q − 1`` fails.
    """
    spec = make_field(q)
    if not 1 <= t < k <= q - 1:
        raise ParameterViolationError(
            f"GES({q},{k},{t}) needs 1 ≤ t < k ≤ q − 1 = {q - 1}.", component=q
        )
    gf = galois_field(spec)
    points = list(range(1, k + 1))
    ncols = q**t

    base = np.empty((ncols, k), dtype=np.int64)
    for col in range(ncols):
        coeffs = column_coefficients(col, q, t)
        base[col] = [gf.eval_poly(coeffs, x) for x in points]

    table = gf.add_table
    if table is not None:
        values = table[np.arange(q)[:, None, None], base[None, :, :]]
    else:
        values = np.empty((q, ncols, k), dtype=np.int64)
        for j in range(q):
            for col in range(ncols):
                values[j, col] = [gf.add(int(v), j) for v in base[col]]

    logger.debug("Constructed GES(%d,%d,%d) over %s", q, k, t, spec)
    provenance = Provenance(
        components=(q,),
        moduli=(spec.modulus,),
        evaluation_points=(tuple(points),),
    )
    return GesArray.from_numpy(values, t=t, provenance=provenance)


def construct_es(q: int, k: int) -> GesArray:
    """
    Build the Euler Square ES(q, k) = GES(q, k, 1) for a prime power ``q``.

    Any two tuples sharing neither a row nor a column intersect at most once
    (exactly once when ``k = q − 1``).
    """
    return construct_prime_power_ges(q, k, 1)


def combine_values(first: IntArray, second: IntArray, first_order: int) -> IntArray:
    """Mixed-radix symbol combination ``c′ + p′·c″``."""
    return first + first_order * second


def _mixed_columns(
    n: int, first_order: int, second_order: int, t: int
) -> tuple[IntArray, IntArray]:
    ncols = n**t
    first_cols = np.zeros(ncols, dtype=np.int64)
    second_cols = np.zeros(ncols, dtype=np.int64)
    remaining = np.arange(ncols, dtype=np.int64)
    for s in range(t):
        remaining, digit = np.divmod(remaining, n)
        first_cols += (digit % first_order) * first_order**s
        second_cols += (digit // first_order) * second_order**s
    return first_cols, second_cols


def compose(a: GesArray, b: GesArray, *, combine: Combiner = combine_values) -> GesArray:
    """
    Compose GES(p′, k, t) and GES(p″, k, t) into GES(p′p″, k, t).

    Row ``m = i + p′j`` combines row ``i`` of ``a`` with row ``j`` of ``b``;
    each column digit combines the same way; symbols combine as
    ``c′ + p′·c″``.

    Args:
        a: First factor, order ``p′``.
        b: Second factor, order ``p″``.
        combine: Symbol combiner; override only to test the verifier.

    Raises:
        ParameterViolationError: If ``k`` or ``t`` differ, or ``t < k < min(p′, p″)`` fails.
    """
    if a.k != b.k or a.t != b.t:
        raise ParameterViolationError(
            f"Cannot compose GES({a.n},{a.k},{a.t}) with GES({b.n},{b.k},{b.t}): "
            "k and t must match."
        )
    k, t = a.k, a.t
    if not t < k < min(a.n, b.n):
        raise ParameterViolationError(
            f"Composition needs t < k < min(p′, p″); got t={t}, k={k}, orders {a.n} and {b.n}.",
            component=min(a.n, b.n),
        )
    n = a.n * b.n
    first, second = a.to_numpy(), b.to_numpy()

    rows = np.arange(n)
    first_rows, second_rows = rows % a.n, rows // a.n
    first_cols, second_cols = _mixed_columns(n, a.n, b.n, t)

    values = combine(
        first[np.ix_(first_rows, first_cols)],
        second[np.ix_(second_rows, second_cols)],
        a.n,
    )
    logger.debug("Composed GES(%d,%d,%d) x GES(%d,%d,%d)", a.n, k, t, b.n, k, t)
    provenance = Provenance(
        components=a.provenance.components + b.provenance.components,
        moduli=a.provenance.moduli + b.provenance.moduli,
        evaluation_points=a.provenance.evaluation_points + b.provenance.evaluation_points,
        column_order=a.provenance.column_order,
        composed=True,
    )
    return GesArray.from_numpy(np.asarray(values, dtype=np.int64), t=t, provenance=provenance)


def construct_ges(n: int, k: int, t: int = 1, *, combine: Combiner = combine_values) -> GesArray:
    """
    Build GES(n, k, t) for any order whose prime-power components exceed ``k``.

    Components are built by polynomial evaluation and left-folded through
    :func:`compose` in ascending order.

    Example:
        .. code-block:: python

            ges = construct_ges(20, 3, 2)   # 4 x 5 composition, 20 x 400 array

    Args:
        n: Order.
        k: Tuple length.
        t: Degree index.
        combine: Symbol combiner passed to :func:`compose`.

    Raises:
        ParameterViolationError: Naming the component that forces ``k`` too small.
    """
    params = GesParams(n=n, k=k, t=t)
    components = params.components
    logger.info("Constructing GES(%d,%d,%d) from components %s", n, k, t, components)
    parts = [construct_prime_power_ges(q, k, t) for q in components]
    return reduce(lambda a, b: compose(a, b, combine=combine), parts)


def truncate(g: GesArray, k_new: int) -> GesArray:
    """
    Keep the first ``k_new`` coordinates of every tuple.

    The result is a GES(n, k_new, t) whenever ``t < k_new < k``.

    Raises:
        ParameterViolationError: If ``t < k_new < k`` fails.
    """
    if not g.t < k_new < g.k:
        raise ParameterViolationError(
            f"Truncation of GES({g.n},{g.k},{g.t}) needs {g.t} < k′ < {g.k}, got {k_new}."
        )
    values = g.to_numpy()[:, :, :k_new]
    provenance = g.provenance.model_copy(
        update={
            "evaluation_points": tuple(pts[:k_new] for pts in g.provenance.evaluation_points),
            "truncated_from": g.provenance.truncated_from or g.k,
        }
    )
    return GesArray.from_numpy(np.ascontiguousarray(values), t=g.t, provenance=provenance)


def transpose(g: GesArray) -> GesArray:
    """
    Swap rows and columns of an Euler Square.

    The axioms of ES(n, k) are symmetric in rows and columns, so the
    transpose is again an ES(n, k). It lists the polynomials of equal constant
    term down each column, the layout in which Φ's blocks are grouped by
    constant term instead of by slope.

    Raises:
        ParameterViolationError: If ``t > 1`` (a GES is not square).
    """
    if g.t != 1:
        raise ParameterViolationError(f"Only Euler Squares (t = 1) can be transposed, got t={g.t}.")
    values = np.ascontiguousarray(g.to_numpy().transpose(1, 0, 2))
    provenance = g.provenance.model_copy(update={"transposed": not g.provenance.transposed})
    return GesArray.from_numpy(values, t=1, provenance=provenance)
