"""
Euler Squares and Generalized Euler Squares.

Prime-power orders are built by polynomial evaluation over GF(q), composite
orders by composing their prime-power components.
"""

from eulersense.ges.construct import (
    column_coefficients,
    combine_values,
    compose,
    construct_es,
    construct_ges,
    construct_prime_power_ges,
    intersection,
    transpose,
    truncate,
)
from eulersense.ges.io import GesDocument, export_ges, ges_document, import_ges
from eulersense.ges.models import (
    AxiomReport,
    CellRef,
    GesArray,
    KTuple,
    PairWitness,
    Provenance,
)
from eulersense.ges.params import GesParams
from eulersense.ges.verify import verify_ges

__all__ = [
    "KTuple",
    "GesArray",
    "Provenance",
    "CellRef",
    "PairWitness",
    "AxiomReport",
    "GesParams",
    "GesDocument",
    "intersection",
    "column_coefficients",
    "combine_values",
    "construct_prime_power_ges",
    "construct_es",
    "compose",
    "construct_ges",
    "transpose",
    "truncate",
    "verify_ges",
    "ges_document",
    "export_ges",
    "import_ges",
]
