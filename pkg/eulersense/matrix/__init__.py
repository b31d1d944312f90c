"""
Sparse binary sensing matrices Φ(n, k, t) built from GES arrays.
"""

from eulersense.matrix.build import build_matrix, column_vector
from eulersense.matrix.io import (
    MatrixMeta,
    PhiDocument,
    export_matrix,
    import_matrix,
    matrix_market_text,
    phi_document,
    sidecar_path,
)
from eulersense.matrix.models import BinarySensingMatrix
from eulersense.matrix.operator import SensingOperator, apply, apply_adjoint

__all__ = [
    "BinarySensingMatrix",
    "SensingOperator",
    "MatrixMeta",
    "PhiDocument",
    "column_vector",
    "build_matrix",
    "apply",
    "apply_adjoint",
    "export_matrix",
    "import_matrix",
    "matrix_market_text",
    "phi_document",
    "sidecar_path",
]
