"""
Pydantic models for finite fields GF(p^r).

Elements are identified by a canonical index: the element with polynomial
representation ``c_{r-1} x^{r-1} + … + c_1 x + c_0`` has index ``Σ c_j p^j``.
Index 0 is the additive identity and index 1 the multiplicative identity.
"""

from typing import Any

from pydantic import BaseModel, Field, computed_field

from eulersense.errors import ParameterViolationError, ValueOutOfRangeError


class FieldSpec(BaseModel, frozen=True):
    """
    A finite field of order ``q = p^r``.

    Build one with :func:`~eulersense.field.arithmetic.make_field` rather than by
    hand; the constructor checks the invariants but does not search for a
    modulus.

    Args:
        p: Prime characteristic.
        r: Extension degree (≥ 1).
        modulus: Monic irreducible polynomial of degree ``r`` over GF(p), as
                 ``r + 1`` coefficients low-degree-first. Empty when ``r = 1``.
    """

    p: int = Field(ge=2, description="Prime characteristic")
    r: int = Field(ge=1, description="Extension degree")
    modulus: tuple[int, ...] = Field(
        default=(),
        description="Monic irreducible modulus, low-degree-first (empty for prime fields)",
    )

    @computed_field  # type: ignore[prop-decorator]
    @property
    def q(self) -> int:
        """Field order ``p^r``."""
        return int(self.p**self.r)

    def model_post_init(self, __context: Any) -> None:
        from eulersense.field.arithmetic import is_irreducible, is_prime

        if not is_prime(self.p):
            raise ParameterViolationError(f"Characteristic {self.p} is not prime.")
        if self.r == 1:
            if self.modulus:
                raise ParameterViolationError("Prime fields take no modulus.")
            return
        if len(self.modulus) != self.r + 1 or self.modulus[-1] != 1:
            raise ParameterViolationError(
                f"Modulus must be monic of degree {self.r}, got {list(self.modulus)}."
            )
        if any(not 0 <= c < self.p for c in self.modulus):
            raise ParameterViolationError(f"Modulus coefficients must lie in [0, {self.p - 1}].")
        if not is_irreducible(self.modulus, self.p):
            raise ParameterViolationError(
                f"Modulus {list(self.modulus)} is reducible over GF({self.p})."
            )

    def __str__(self) -> str:
        return f"GF({self.q})" if self.r == 1 else f"GF({self.p}^{self.r})"


class FieldElement(BaseModel, frozen=True):
    """An element of some :class:`FieldSpec`, by canonical index."""

    idx: int = Field(ge=0, description="Canonical index in [0, q)")

    def check(self, field: FieldSpec) -> int:
        """Return ``idx`` after confirming it belongs to ``field``."""
        if self.idx >= field.q:
            raise ValueOutOfRangeError(f"Element index {self.idx} is outside {field}.")
        return self.idx

    def __int__(self) -> int:
        return self.idx
