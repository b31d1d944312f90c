"""
Parameter validation for GES construction.

:class:`GesParams` checks ``(n, k, t)`` against every prime-power component
of ``n`` before any array is built, so impossible requests fail with a
message naming the component that blocks them.
"""

from typing import Any

from pydantic import BaseModel, Field

from eulersense.errors import ParameterViolationError
from eulersense.field.arithmetic import factor_prime_powers


class GesParams(BaseModel, frozen=True):
    """
    Index ``(n, k, t)`` of a Generalized Euler Square.

    Composite ``n`` is split into maximal prime-power components ``q_i``; a
    GES exists by construction when ``t < k < min_i q_i``.

    Example:
        .. code-block:: python

            GesParams(n=20, k=3, t=2)    # components 4 and 5
            GesParams(n=6, k=2, t=1)     # raises: component 2 requires k < 2

    Args:
        n: Order (rows and alphabet size).
        k: Tuple length.
        t: Degree index.
    """

    n: int = Field(ge=2, description="Order of the square")
    k: int = Field(ge=2, description="Tuple length")
    t: int = Field(default=1, ge=1, description="Degree index")

    def model_post_init(self, __context: Any) -> None:
        if self.t >= self.k:
            raise ParameterViolationError(
                f"Need t < k, got t={self.t}, k={self.k}."
            )
        for q in self.components:
            if self.k >= q:
                raise ParameterViolationError(
                    f"Component {q} of n={self.n} requires k < {q} (got k={self.k}).",
                    component=q,
                )

    @property
    def components(self) -> list[int]:
        """Maximal prime-power components of ``n``, ascending."""
        return factor_prime_powers(self.n)

    @property
    def is_prime_power(self) -> bool:
        """True when ``n`` has a single component."""
        return len(self.components) == 1
