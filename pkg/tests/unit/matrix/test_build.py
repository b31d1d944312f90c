"""
Tests for assembling Φ from a GES array.
"""

import numpy as np
import pytest

from eulersense.errors import InvariantViolationError, LengthMismatchError, ValueOutOfRangeError
from eulersense.ges.construct import construct_ges, transpose
from eulersense.ges.models import GesArray, KTuple
from eulersense.matrix.build import build_matrix, column_vector
from eulersense.matrix.models import BinarySensingMatrix


class TestColumnVector:
    def test_bands(self) -> None:
        assert column_vector((1, 2), n=3, k=2) == [1, 5]
        assert column_vector(KTuple(values=(0, 0, 4), n=5), n=5, k=3) == [0, 5, 14]

    def test_wrong_length(self) -> None:
        with pytest.raises(LengthMismatchError):
            column_vector((1, 2, 0), n=3, k=2)

    def test_value_out_of_range(self) -> None:
        with pytest.raises(ValueOutOfRangeError):
            column_vector((3, 0), n=3, k=2)


class TestBuildMatrix:
    def test_phi_3_2_1(self, phi_3_2_1: BinarySensingMatrix) -> None:
        assert (phi_3_2_1.rows, phi_3_2_1.cols, phi_3_2_1.nnz) == (6, 9, 18)
        assert phi_3_2_1.columns[:3] == ((0, 3), (1, 4), (2, 5))
        assert phi_3_2_1.columns[3:6] == ((1, 5), (2, 3), (0, 4))
        assert str(phi_3_2_1) == "Φ(3,2,1): 6×9"

    def test_blocks_by_constant_term(self, es_3_2: GesArray) -> None:
        m = build_matrix(transpose(es_3_2))
        assert [m.columns[3 * b : 3 * b + 3] for b in range(3)] == [
            ((0, 3), (1, 5), (2, 4)),
            ((1, 4), (2, 3), (0, 5)),
            ((2, 5), (0, 4), (1, 3)),
        ]

    def test_one_per_band(self, phi_7_6_1: BinarySensingMatrix) -> None:
        dense = phi_7_6_1.to_dense()
        bands = dense.reshape(6, 7, -1).sum(axis=1)
        assert (bands == 1).all()

    def test_blocks_are_orthogonal(self, phi_7_6_1: BinarySensingMatrix) -> None:
        dense = phi_7_6_1.to_dense()
        for b in range(phi_7_6_1.num_blocks):
            block = dense[:, 7 * b : 7 * b + 7]
            assert np.array_equal(block.T @ block, 6 * np.eye(7))

    def test_degree_two(self, ges_5_4_2: GesArray) -> None:
        m = build_matrix(ges_5_4_2)
        assert (m.rows, m.cols, m.num_blocks, m.block_width) == (20, 125, 25, 5)
        assert m.provenance == ges_5_4_2.provenance

    def test_composite(self) -> None:
        m = build_matrix(construct_ges(15, 2, 1))
        assert (m.rows, m.cols) == (30, 225)

    def test_block_clash(self, es_3_2: GesArray) -> None:
        cells = list(es_3_2.cells)
        cells[3] = (0, 2)  # row 1, column 0 now shares band 0 with row 0
        broken = es_3_2.model_copy(update={"cells": tuple(cells)})
        with pytest.raises(InvariantViolationError) as exc_info:
            build_matrix(broken)

        assert exc_info.value.witness == (0, 1)

    def test_overlap_above_t(self, es_3_2: GesArray) -> None:
        cells = list(es_3_2.cells)
        # column 1 becomes a row permutation of column 0
        cells[1], cells[4], cells[7] = (1, 1), (2, 2), (0, 0)
        broken = es_3_2.model_copy(update={"cells": tuple(cells)})
        with pytest.raises(InvariantViolationError) as exc_info:
            build_matrix(broken)

        assert exc_info.value.witness == (0, 5)

    def test_out_of_range(self, es_3_2: GesArray) -> None:
        cells = list(es_3_2.cells)
        cells[0] = (0, 3)
        with pytest.raises(ValueOutOfRangeError):
            build_matrix(es_3_2.model_copy(update={"cells": tuple(cells)}))
