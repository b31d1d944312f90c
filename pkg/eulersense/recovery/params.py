"""
Configuration of recovery experiments.

An experiment config is a JSON document validated into
:class:`ExperimentConfig` before any matrix is built.
"""

from typing import Any

from pydantic import AliasChoices, BaseModel, Field, field_validator

from eulersense.enums import Family, Solver, ValueDistribution
from eulersense.errors import ParameterViolationError
from eulersense.ges.params import GesParams


class ExperimentConfig(BaseModel, frozen=True):
    """
    Parameters of a recovery experiment on Φ(n, k, t).

    Example:
        .. code-block:: python

            config = ExperimentConfig(n=8, k=7, d=2, s=2, exhaustive=True, seed=42)

    Args:
        n: GES order.
        k: Tuple length.
        t: Degree index.
        d: Block length; must divide ``n``. OMP needs ``d = 1``.
        sparsities: Block sparsities to test (``s`` is accepted as an alias,
                    as a single integer or a list).
        trials: Random trials per sparsity (ignored when ``exhaustive``).
        seed: Base seed; trial ``i`` of sparsity ``s`` uses its own stream.
        solver: Greedy solver.
        value_dist: Distribution of nonzero entries.
        exhaustive: Enumerate every block support of each size instead of sampling.
        tol: Solver residual tolerance.
        exact_tol: Largest ``‖x̂ − x‖∞`` that still counts as exact.
    """

    n: int = Field(ge=2)
    k: int = Field(ge=2)
    t: int = Field(default=1, ge=1)
    d: int = Field(default=1, ge=1)
    sparsities: tuple[int, ...] = Field(validation_alias=AliasChoices("sparsities", "s"))
    trials: int = Field(default=100, ge=1)
    seed: int = Field(default=0, ge=0)
    solver: Solver = Solver.BOMP
    value_dist: ValueDistribution = ValueDistribution.GAUSSIAN
    exhaustive: bool = False
    tol: float = Field(default=1e-10, gt=0)
    exact_tol: float = Field(default=1e-6, gt=0)

    @field_validator("sparsities", mode="before")
    @classmethod
    def _wrap_single(cls, value: Any) -> Any:
        return (value,) if isinstance(value, int) else value

    def model_post_init(self, __context: Any) -> None:
        GesParams(n=self.n, k=self.k, t=self.t)
        if self.n % self.d:
            raise ParameterViolationError(
                f"Block length d={self.d} must divide n={self.n}."
            )
        if self.solver == Solver.OMP and self.d != 1:
            raise ParameterViolationError("OMP works column by column; use d=1 or solver 'bomp'.")
        if not self.sparsities:
            raise ParameterViolationError("Give at least one sparsity.")
        for s in self.sparsities:
            if not 0 <= s <= self.blocks:
                raise ParameterViolationError(
                    f"Block sparsity {s} is outside [0, {self.blocks}]."
                )
            if s * self.d > self.rows:
                raise ParameterViolationError(
                    f"s·d = {s * self.d} columns exceed the {self.rows} measurements."
                )

    @property
    def family(self) -> Family:
        return Family.ES if self.t == 1 else Family.GES

    @property
    def rows(self) -> int:
        return self.n * self.k

    @property
    def columns(self) -> int:
        return int(self.n ** (self.t + 1))

    @property
    def blocks(self) -> int:
        return self.columns // self.d
