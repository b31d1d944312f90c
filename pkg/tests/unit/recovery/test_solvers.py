"""
Tests for OMP and Block-OMP.
"""

import numpy as np
import pytest

from eulersense.errors import (
    BlockPartitionInvalidError,
    DimensionMismatchError,
    ParameterViolationError,
    SingularSubproblemError,
)
from eulersense.ges.construct import construct_es
from eulersense.matrix.build import build_matrix
from eulersense.matrix.models import BinarySensingMatrix
from eulersense.matrix.operator import SensingOperator
from eulersense.recovery.solvers import bomp, omp


@pytest.fixture(scope="module")
def phi_8_7_1() -> BinarySensingMatrix:
    return build_matrix(construct_es(8, 7))


def _planted(cols: int, entries: dict[int, float]) -> np.ndarray:
    x = np.zeros(cols)
    for index, value in entries.items():
        x[index] = value
    return x


class TestOmp:
    def test_recovers_sparse_signal(self, phi_7_6_1: BinarySensingMatrix) -> None:
        x = _planted(49, {3: 1.5, 20: -0.7, 44: 2.0})
        op = SensingOperator(phi_7_6_1)
        result = omp(op, op.apply(x), s=3)
        assert sorted(result.support) == [3, 20, 44]
        assert np.allclose(result.to_numpy(), x, atol=1e-9)
        assert result.residual_norm < 1e-9
        assert result.iterations == 3

    def test_stops_on_residual(self, phi_7_6_1: BinarySensingMatrix) -> None:
        x = _planted(49, {10: 1.0})
        result = omp(phi_7_6_1, SensingOperator(phi_7_6_1).apply(x))
        assert result.support == (10,)

    def test_zero_measurement(self, phi_7_6_1: BinarySensingMatrix) -> None:
        result = omp(phi_7_6_1, np.zeros(42), s=3)
        assert result.support == ()
        assert result.iterations == 0
        assert not result.to_numpy().any()

    def test_matches_bomp_with_unit_blocks(self, phi_7_6_1: BinarySensingMatrix) -> None:
        y = np.random.default_rng(4).standard_normal(42)
        assert omp(phi_7_6_1, y, s=4) == bomp(phi_7_6_1, y, d=1, s=4)

    def test_residual_orthogonal_to_selection(self, phi_7_6_1: BinarySensingMatrix) -> None:
        y = np.random.default_rng(8).standard_normal(42)
        op = SensingOperator(phi_7_6_1)
        result = omp(op, y, s=5)
        residual = y - op.apply(result.to_numpy())
        assert np.linalg.norm(residual) == pytest.approx(result.residual_norm, abs=1e-9)
        assert np.abs(op.adjoint(residual)[list(result.columns)]).max() <= 1e-8

    def test_wrong_measurement_length(self, phi_7_6_1: BinarySensingMatrix) -> None:
        with pytest.raises(DimensionMismatchError):
            omp(phi_7_6_1, np.zeros(41), s=1)


class TestBomp:
    def test_recovers_block_sparse_signal(self, phi_8_7_1: BinarySensingMatrix) -> None:
        x = _planted(64, {10: 1.0, 11: -2.0, 40: 0.5, 41: 0.25})
        op = SensingOperator(phi_8_7_1)
        result = bomp(op, op.apply(x), d=2, s=2)
        assert sorted(result.support) == [5, 20]
        assert result.columns[:2] in ((10, 11), (40, 41))
        assert np.allclose(result.to_numpy(), x, atol=1e-9)

    def test_residual_orthogonal_to_selection(self, phi_8_7_1: BinarySensingMatrix) -> None:
        y = np.random.default_rng(9).standard_normal(56)
        op = SensingOperator(phi_8_7_1)
        result = bomp(op, y, d=2, s=3)
        assert len(result.columns) == 6
        residual = y - op.apply(result.to_numpy())
        assert np.abs(op.adjoint(residual)[list(result.columns)]).max() <= 1e-8

    def test_invalid_block_length(self, phi_7_6_1: BinarySensingMatrix) -> None:
        with pytest.raises(BlockPartitionInvalidError):
            bomp(phi_7_6_1, np.zeros(42), d=2)

    def test_too_many_blocks(self, phi_7_6_1: BinarySensingMatrix) -> None:
        with pytest.raises(ParameterViolationError):
            bomp(phi_7_6_1, np.zeros(42), d=7, s=7)

    def test_dependent_blocks(self, phi_3_2_1: BinarySensingMatrix) -> None:
        # every width-3 block sums to the all-ones vector
        y = np.random.default_rng(0).standard_normal(6)
        with pytest.raises(SingularSubproblemError) as exc_info:
            bomp(phi_3_2_1, y, d=3, s=2)

        assert exc_info.value.selected is not None
        assert len(exc_info.value.selected) == 6
