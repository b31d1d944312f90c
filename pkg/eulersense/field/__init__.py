"""
Finite fields GF(p^r) with a canonical element ordering.

Polynomial coefficients and evaluation points of the Euler Square
constructions are drawn from these fields.
"""

from eulersense.field.arithmetic import (
    GaloisField,
    eval_poly,
    factor_prime_powers,
    factorize,
    field_add,
    field_inv,
    field_mul,
    field_neg,
    find_irreducible,
    galois_field,
    is_irreducible,
    is_prime,
    is_prime_power,
    make_field,
    prime_power,
)
from eulersense.field.models import FieldElement, FieldSpec

__all__ = [
    "FieldSpec",
    "FieldElement",
    "GaloisField",
    "galois_field",
    "make_field",
    "find_irreducible",
    "is_irreducible",
    "is_prime",
    "is_prime_power",
    "prime_power",
    "factorize",
    "factor_prime_powers",
    "field_add",
    "field_mul",
    "field_neg",
    "field_inv",
    "eval_poly",
]
