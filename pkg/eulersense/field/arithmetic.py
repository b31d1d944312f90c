"""
Exact arithmetic over GF(p^r).

Polynomials over GF(p) are coefficient lists, low-degree-first. Field elements
travel as canonical integer indices (see :mod:`eulersense.field.models`);
:class:`GaloisField` does the work on plain ints with precomputed tables, and
the ``field_*`` functions wrap it for :class:`FieldElement` callers.
"""

import itertools
import logging
from collections.abc import Iterator, Sequence
from functools import lru_cache

import numpy as np
import numpy.typing as npt

from eulersense.errors import (
    DivisionByZeroError,
    NotPrimePowerError,
    ParameterViolationError,
    ValueOutOfRangeError,
)
from eulersense.field.models import FieldElement, FieldSpec

logger = logging.getLogger(__name__)

# Tables are q×q; above this order elements are combined on the fly.
TABLE_LIMIT = 256


# ---------------------------------------------------------------------------
# Integer helpers
# ---------------------------------------------------------------------------


def is_prime(n: int) -> bool:
    """Return True if ``n`` is prime (trial division)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Return the prime factorization of ``n ≥ 1`` as ``{prime: exponent}``."""
    if n < 1:
        raise ParameterViolationError(f"Cannot factor {n}.")
    factors: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            factors[f] = factors.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, r)`` with ``q = p^r``, or None if ``q`` is not a prime power."""
    if q < 2:
        return None
    factors = factorize(q)
    if len(factors) != 1:
        return None
    ((p, r),) = factors.items()
    return p, r


def is_prime_power(q: int) -> bool:
    """Return True if ``q = p^r`` for a prime ``p`` and ``r ≥ 1``."""
    return prime_power(q) is not None


def factor_prime_powers(n: int) -> list[int]:
    """
    Split ``n`` into its maximal prime-power components, ascending.

    Example:
        .. code-block:: python

            factor_prime_powers(20)   # [4, 5]
            factor_prime_powers(360)  # [5, 8, 9]
    """
    return sorted(p**e for p, e in factorize(n).items())


# ---------------------------------------------------------------------------
# Polynomials over GF(p)
# ---------------------------------------------------------------------------


def _trim(poly: list[int]) -> list[int]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def poly_mod(dividend: Sequence[int], divisor: Sequence[int], p: int) -> list[int]:
    """Remainder of ``dividend`` by a monic ``divisor`` over GF(p)."""
    rem = _trim([c % p for c in dividend])
    deg = len(divisor) - 1
    while len(rem) - 1 >= deg and rem:
        shift = len(rem) - 1 - deg
        lead = rem[-1]
        for i, c in enumerate(divisor):
            rem[shift + i] = (rem[shift + i] - lead * c) % p
        _trim(rem)
    return rem


def _monic_polys(p: int, degree: int) -> Iterator[tuple[int, ...]]:
    # low coefficients in canonical-index order: c_0 varies fastest
    for high_first in itertools.product(range(p), repeat=degree):
        yield high_first[::-1]


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """
    Return True if the monic polynomial ``coeffs`` is irreducible over GF(p).

    Trial division by every monic polynomial of degree 1..⌊r/2⌋.
    """
    r = len(coeffs) - 1
    if r < 1:
        return False
    if r == 1:
        return True
    for degree in range(1, r // 2 + 1):
        for low in _monic_polys(p, degree):
            if not poly_mod(coeffs, [*low, 1], p):
                return False
    return True


def find_irreducible(p: int, r: int) -> tuple[int, ...]:
    """
    Return the smallest monic irreducible of degree ``r``.

    Candidates are ordered by the canonical index ``Σ c_j p^j`` of their low
    coefficients, so over GF(2) the result is ``x² + x + 1`` = ``(1, 1, 1)``
    for ``r = 2`` and ``x³ + x + 1`` = ``(1, 1, 0, 1)`` for ``r = 3``.

    Args:
        p: Prime characteristic.
        r: Degree, at least 2.

    Returns:
        ``r + 1`` coefficients, low-degree-first, ending in 1.
    """
    if r < 2:
        raise ParameterViolationError(f"Irreducible search needs degree ≥ 2, got {r}.")
    if not is_prime(p):
        raise ParameterViolationError(f"Characteristic {p} is not prime.")
    for low in _monic_polys(p, r):
        candidate = (*low, 1)
        if is_irreducible(candidate, p):
            return candidate
    raise AssertionError(f"no irreducible of degree {r} over GF({p})")  # pragma: no cover


def make_field(q: int) -> FieldSpec:
    """
    Build the field of order ``q``.

    Args:
        q: Field order; must be a prime power ≥ 2.

    Returns:
        :class:`FieldSpec` with the smallest monic irreducible modulus.

    Raises:
        ParameterViolationError: If ``q < 2``.
        NotPrimePowerError: If ``q`` has two or more distinct prime factors.
    """
    if q < 2:
        raise ParameterViolationError(f"Field order must be at least 2, got {q}.")
    pr = prime_power(q)
    if pr is None:
        raise NotPrimePowerError(q)
    p, r = pr
    modulus = find_irreducible(p, r) if r > 1 else ()
    return FieldSpec(p=p, r=r, modulus=modulus)


# ---------------------------------------------------------------------------
# Field engine
# ---------------------------------------------------------------------------


class GaloisField:
    """
    Integer-level arithmetic in the field described by a :class:`FieldSpec`.

    Addition and multiplication tables are built once for ``q ≤ TABLE_LIMIT``.

    Args:
        spec: The field to operate in.
    """

    def __init__(self, spec: FieldSpec) -> None:
        self.spec = spec
        self.p = spec.p
        self.r = spec.r
        self.q = spec.q
        self._add_table: npt.NDArray[np.int64] | None = None
        self._mul_table: npt.NDArray[np.int64] | None = None
        if self.q <= TABLE_LIMIT:
            self._build_tables()

    def to_coeffs(self, idx: int) -> list[int]:
        """Base-p digits of ``idx``, low-degree-first, length ``r``."""
        digits = []
        for _ in range(self.r):
            idx, digit = divmod(idx, self.p)
            digits.append(digit)
        return digits

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        """Canonical index of a coefficient vector of length ≤ ``r``."""
        idx = 0
        for c in reversed(coeffs):
            idx = idx * self.p + c % self.p
        return idx

    def _raw_add(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a + b) % self.p
        return self.from_coeffs(
            [(x + y) % self.p for x, y in zip(self.to_coeffs(a), self.to_coeffs(b), strict=True)]
        )

    def _raw_mul(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a * b) % self.p
        ca, cb = self.to_coeffs(a), self.to_coeffs(b)
        product = [0] * (2 * self.r - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    product[i + j] = (product[i + j] + x * y) % self.p
        return self.from_coeffs(poly_mod(product, self.spec.modulus, self.p))

    def _build_tables(self) -> None:
        q = self.q
        add = np.empty((q, q), dtype=np.int64)
        mul = np.empty((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(a, q):
                add[a, b] = add[b, a] = self._raw_add(a, b)
                mul[a, b] = mul[b, a] = self._raw_mul(a, b)
        self._add_table = add
        self._mul_table = mul
        logger.debug("Built arithmetic tables for %s", self.spec)

    @property
    def add_table(self) -> npt.NDArray[np.int64] | None:
        """``q × q`` addition table, or None above ``TABLE_LIMIT``."""
        return self._add_table

    @property
    def mul_table(self) -> npt.NDArray[np.int64] | None:
        """``q × q`` multiplication table, or None above ``TABLE_LIMIT``."""
        return self._mul_table

    def add(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return int(self._add_table[a, b])
        return self._raw_add(a, b)

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return int(self._mul_table[a, b])
        return self._raw_mul(a, b)

    def neg(self, a: int) -> int:
        return self.from_coeffs([-c % self.p for c in self.to_coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        """Multiplicative inverse via ``a^(q-2)``."""
        if a == 0:
            raise DivisionByZeroError()
        return self.pow(a, self.q - 2)

    def eval_poly(self, coeffs: Sequence[int], x: int) -> int:
        """Horner evaluation of ``Σ coeffs[i] x^i``."""
        acc = 0
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, x), c)
        return acc

    def __repr__(self) -> str:
        return f"GaloisField({self.spec})"


@lru_cache(maxsize=64)
def galois_field(spec: FieldSpec) -> GaloisField:
    """Return the shared :class:`GaloisField` engine for ``spec``."""
    return GaloisField(spec)


# ---------------------------------------------------------------------------
# Element-level API
# ---------------------------------------------------------------------------


def field_add(f: FieldSpec, a: FieldElement, b: FieldElement) -> FieldElement:
    """Return ``a + b`` in ``f``."""
    return FieldElement(idx=galois_field(f).add(a.check(f), b.check(f)))


def field_mul(f: FieldSpec, a: FieldElement, b: FieldElement) -> FieldElement:
    """Return ``a · b`` in ``f``."""
    return FieldElement(idx=galois_field(f).mul(a.check(f), b.check(f)))


def field_neg(f: FieldSpec, a: FieldElement) -> FieldElement:
    """Return ``-a`` in ``f``."""
    return FieldElement(idx=galois_field(f).neg(a.check(f)))


def field_inv(f: FieldSpec, a: FieldElement) -> FieldElement:
    """
    Return ``a⁻¹`` in ``f``.

    Raises:
        DivisionByZeroError: If ``a`` is zero.
    """
    return FieldElement(idx=galois_field(f).inv(a.check(f)))


def eval_poly(f: FieldSpec, coeffs: Sequence[FieldElement], x: FieldElement) -> FieldElement:
    """
    Evaluate a polynomial at ``x`` by Horner's rule.

    Args:
        f: The field.
        coeffs: Coefficients, low-degree-first; must be nonempty.
        x: Evaluation point.

    Returns:
        The value as a :class:`FieldElement`.
    """
    if not coeffs:
        raise ValueOutOfRangeError("Polynomial must have at least one coefficient.")
    gf = galois_field(f)
    return FieldElement(idx=gf.eval_poly([c.check(f) for c in coeffs], x.check(f)))
