"""
Pydantic models for Euler Squares and Generalized Euler Squares.

A GES(n, k, t) is an ``n × n^t`` rectangular array of k-tuples over
``{0, …, n−1}``; an Euler Square ES(n, k) is the ``t = 1`` case. Arrays are
stored row-major as a flat tuple of k-tuples, the same layout as the
``.ges.json`` file format.
"""

from typing import Any

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, Field

from eulersense.enums import Axiom
from eulersense.errors import LengthMismatchError, ParameterViolationError, ValueOutOfRangeError


class KTuple(BaseModel, frozen=True):
    """
    A k-ad of symbols from ``{0, …, n−1}``.

    Args:
        values: The ``k`` symbols, in coordinate order.
        n: Alphabet size.
    """

    values: tuple[int, ...]
    n: int = Field(ge=1)

    @property
    def k(self) -> int:
        """Tuple length."""
        return len(self.values)

    def model_post_init(self, __context: Any) -> None:
        for value in self.values:
            if not 0 <= value < self.n:
                raise ValueOutOfRangeError(
                    f"Tuple value {value} is outside [0, {self.n - 1}]: {self.values}"
                )

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]


class Provenance(BaseModel, frozen=True):
    """
    How a GES array was produced.

    Each prime-power component contributes its order, field modulus and
    evaluation points; composed arrays list components in fold order.
    """

    components: tuple[int, ...] = Field(description="Prime-power orders, in fold order")
    moduli: tuple[tuple[int, ...], ...] = Field(
        description="Field modulus per component (empty for prime fields)"
    )
    evaluation_points: tuple[tuple[int, ...], ...] = Field(
        description="Evaluation points S_k per component, as canonical indices"
    )
    column_order: str = Field(
        default="lex-x1-fastest",
        description="Enumeration of zero-constant polynomials over columns",
    )
    composed: bool = Field(default=False, description="Built by composing components")
    truncated_from: int | None = Field(
        default=None, description="Original tuple length when truncated"
    )
    transposed: bool = Field(default=False, description="Rows and columns swapped (t = 1 only)")


class GesArray(BaseModel, frozen=True):
    """
    A Generalized Euler Square GES(n, k, t).

    The constructor checks shape only (``n > k > t ≥ 1`` and ``n^{t+1}``
    tuples of length ``k``); the combinatorial axioms are checked by
    :func:`~eulersense.ges.verify.verify_ges`.

    Args:
        n: Alphabet and row count.
        k: Tuple length.
        t: Degree index; the array has ``n^t`` columns.
        cells: ``n^{t+1}`` k-tuples, row-major.
        provenance: Construction trace.
    """

    n: int = Field(ge=2)
    k: int = Field(ge=2)
    t: int = Field(ge=1)
    cells: tuple[tuple[int, ...], ...] = Field(repr=False)
    provenance: Provenance

    def model_post_init(self, __context: Any) -> None:
        if not self.n > self.k > self.t:
            raise ParameterViolationError(
                f"GES({self.n},{self.k},{self.t}) needs n > k > t ≥ 1."
            )
        expected = self.n ** (self.t + 1)
        if len(self.cells) != expected:
            raise ParameterViolationError(
                f"GES({self.n},{self.k},{self.t}) needs {expected} tuples, got {len(self.cells)}."
            )
        for cell in self.cells:
            if len(cell) != self.k:
                raise LengthMismatchError(f"Expected {self.k}-tuples, found {cell}.")

    @property
    def ncols(self) -> int:
        """Number of columns, ``n^t``."""
        return int(self.n**self.t)

    @property
    def is_euler_square(self) -> bool:
        """True for the ``t = 1`` case."""
        return self.t == 1

    def cell(self, row: int, col: int) -> KTuple:
        """Return the tuple at ``(row, col)``."""
        return KTuple(values=self.cells[row * self.ncols + col], n=self.n)

    def column(self, col: int) -> list[KTuple]:
        """Return the ``n`` tuples of column ``col`` in row order."""
        return [self.cell(row, col) for row in range(self.n)]

    def row(self, row: int) -> list[KTuple]:
        """Return the ``n^t`` tuples of row ``row`` in column order."""
        return [self.cell(row, col) for col in range(self.ncols)]

    def to_numpy(self) -> npt.NDArray[np.int64]:
        """Return the cells as an ``(n, n^t, k)`` integer array."""
        return np.asarray(self.cells, dtype=np.int64).reshape(self.n, self.ncols, self.k)

    @classmethod
    def from_numpy(
        cls, values: npt.NDArray[np.int64], t: int, provenance: Provenance
    ) -> "GesArray":
        """Build from an ``(n, n^t, k)`` array."""
        n, _, k = values.shape
        cells = tuple(tuple(cell) for cell in values.reshape(-1, k).tolist())
        return cls(n=n, k=k, t=t, cells=cells, provenance=provenance)


class CellRef(BaseModel, frozen=True):
    """Position of a tuple inside a GES array."""

    row: int
    col: int


class PairWitness(BaseModel, frozen=True):
    """Two tuples and the number of coordinates where they agree."""

    first: CellRef
    second: CellRef
    intersections: int


class AxiomReport(BaseModel, frozen=True):
    """
    Outcome of checking GES axioms 1–4 on an array.

    Maxima are ``-1`` when no pair of that kind exists. ``witnesses`` holds a
    pair for every failed pairwise axiom, plus the pair attaining each maximum.
    """

    n: int
    k: int
    t: int
    range_ok: bool = Field(description="GES 1")
    same_column_ok: bool = Field(description="GES 2")
    same_row_ok: bool = Field(description="GES 3")
    overall_ok: bool = Field(description="GES 4")
    max_same_row: int
    max_same_column: int
    max_cross: int
    max_overall: int
    range_witness: CellRef | None = None
    witnesses: dict[str, PairWitness] = Field(default_factory=dict)
    columns_are_permutations: bool
    pairs_checked: int
    sampled: bool = False

    @property
    def failed_axioms(self) -> list[Axiom]:
        """Axioms that did not hold, in order."""
        flags = {
            Axiom.GES1: self.range_ok,
            Axiom.GES2: self.same_column_ok,
            Axiom.GES3: self.same_row_ok,
            Axiom.GES4: self.overall_ok,
        }
        return [axiom for axiom, ok in flags.items() if not ok]

    @property
    def passed(self) -> bool:
        """True when all four axioms hold."""
        return not self.failed_axioms
