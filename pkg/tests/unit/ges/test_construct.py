"""
Tests for Euler Square and GES construction.
"""

import numpy as np
import pytest

from eulersense.enums import Axiom
from eulersense.errors import LengthMismatchError, NotPrimePowerError, ParameterViolationError
from eulersense.ges.construct import (
    IntArray,
    column_coefficients,
    compose,
    construct_es,
    construct_ges,
    construct_prime_power_ges,
    intersection,
    transpose,
    truncate,
)
from eulersense.ges.models import GesArray, KTuple
from eulersense.ges.verify import verify_ges


def off_by_one(first: IntArray, second: IntArray, first_order: int) -> IntArray:
    return first + first_order * np.maximum(second - 1, 0)


class TestIntersection:
    def test_counts_agreements(self) -> None:
        a = KTuple(values=(0, 1, 2), n=3)
        b = KTuple(values=(0, 2, 2), n=3)
        assert intersection(a, b) == 2

    def test_length_mismatch(self) -> None:
        with pytest.raises(LengthMismatchError):
            intersection(KTuple(values=(0, 1), n=3), KTuple(values=(0, 1, 2), n=3))


class TestColumnCoefficients:
    def test_first_coefficient_fastest(self) -> None:
        assert column_coefficients(0, 5, 2) == [0, 0, 0]
        assert column_coefficients(1, 5, 2) == [0, 1, 0]
        assert column_coefficients(23, 5, 2) == [0, 3, 4]


class TestConstructEs:
    def test_es_3_2(self, es_3_2: GesArray) -> None:
        rows = [es_3_2.cells[3 * i : 3 * i + 3] for i in range(3)]
        assert rows == [
            ((0, 0), (1, 2), (2, 1)),
            ((1, 1), (2, 0), (0, 2)),
            ((2, 2), (0, 1), (1, 0)),
        ]

    def test_provenance(self, es_3_2: GesArray) -> None:
        assert es_3_2.provenance.components == (3,)
        assert es_3_2.provenance.moduli == ((),)
        assert es_3_2.provenance.evaluation_points == ((1, 2),)
        assert not es_3_2.provenance.composed

    def test_extension_field(self) -> None:
        g = construct_es(4, 3)
        assert g.provenance.moduli == ((1, 1, 1),)
        assert verify_ges(g).passed

    def test_columns_are_permutations(self) -> None:
        assert verify_ges(construct_es(7, 6)).columns_are_permutations

    def test_not_prime_power(self) -> None:
        with pytest.raises(NotPrimePowerError):
            construct_prime_power_ges(6, 2, 1)

    def test_k_too_large(self) -> None:
        with pytest.raises(ParameterViolationError) as exc_info:
            construct_es(5, 5)

        assert exc_info.value.component == 5


class TestConstructPrimePowerGes:
    @pytest.mark.parametrize(
        ("col", "row0"),
        [(0, (0, 0, 0, 0)), (1, (1, 2, 3, 4)), (23, (2, 2, 0, 1)), (24, (3, 4, 3, 0))],
    )
    def test_ges_5_4_2_columns(self, ges_5_4_2: GesArray, col: int, row0: tuple[int, ...]) -> None:
        for j in range(5):
            assert ges_5_4_2.cell(j, col).values == tuple((v + j) % 5 for v in row0)

    def test_shape(self, ges_5_4_2: GesArray) -> None:
        assert (ges_5_4_2.n, ges_5_4_2.ncols, ges_5_4_2.k) == (5, 25, 4)
        assert ges_5_4_2.to_numpy().shape == (5, 25, 4)


class TestConstructGes:
    @pytest.mark.parametrize(("n", "k", "t"), [(15, 2, 1), (21, 2, 1), (12, 2, 1)])
    def test_composite_orders(self, n: int, k: int, t: int) -> None:
        g = construct_ges(n, k, t)
        assert (g.n, g.ncols) == (n, n**t)
        assert g.provenance.composed
        assert verify_ges(g).passed

    def test_composite_degree_two(self) -> None:
        g = construct_ges(20, 3, 2)
        assert g.provenance.components == (4, 5)
        assert g.ncols == 400
        assert verify_ges(g, sample_pairs=200_000, seed=3).passed

    def test_prime_power_is_not_composed(self) -> None:
        g = construct_ges(9, 4, 2)
        assert not g.provenance.composed
        assert g.provenance.components == (9,)

    def test_names_blocking_component(self) -> None:
        with pytest.raises(ParameterViolationError) as exc_info:
            construct_ges(6, 2, 1)

        assert exc_info.value.component == 2

    def test_faulty_composition_is_caught(self) -> None:
        report = verify_ges(construct_ges(15, 2, 1, combine=off_by_one))
        assert Axiom.GES4 in report.failed_axioms
        assert "overall" in report.witnesses


class TestCompose:
    def test_row_and_symbol_layout(self) -> None:
        a, b = construct_es(3, 2), construct_es(5, 2)
        g = compose(a, b)
        # row m = i + 3j, column c = c' + 3c'', symbol = v' + 3v''
        for i, j, c1, c2 in [(0, 0, 0, 0), (1, 2, 2, 4), (2, 4, 1, 3)]:
            expected = tuple(
                x + 3 * y for x, y in zip(a.cell(i, c1).values, b.cell(j, c2).values, strict=True)
            )
            assert g.cell(i + 3 * j, c1 + 3 * c2).values == expected

    def test_mismatched_k(self) -> None:
        with pytest.raises(ParameterViolationError):
            compose(construct_es(4, 2), construct_es(5, 3))


class TestTruncate:
    def test_keeps_prefix(self) -> None:
        g = construct_es(7, 6)
        short = truncate(g, 3)
        assert short.k == 3
        assert short.cell(2, 5).values == g.cell(2, 5).values[:3]
        assert short.provenance.truncated_from == 6
        assert short.provenance.evaluation_points == ((1, 2, 3),)
        assert verify_ges(short).passed

    @pytest.mark.parametrize("k_new", [1, 6, 7])
    def test_invalid_length(self, k_new: int) -> None:
        with pytest.raises(ParameterViolationError):
            truncate(construct_es(7, 6), k_new)


class TestTranspose:
    def test_swaps_rows_and_columns(self, es_3_2: GesArray) -> None:
        flipped = transpose(es_3_2)
        for i in range(3):
            for j in range(3):
                assert flipped.cell(i, j) == es_3_2.cell(j, i)
        assert flipped.provenance.transposed
        assert verify_ges(flipped).passed

    def test_involution(self, es_3_2: GesArray) -> None:
        twice = transpose(transpose(es_3_2))
        assert twice.cells == es_3_2.cells
        assert not twice.provenance.transposed

    def test_rejects_degree_two(self, ges_5_4_2: GesArray) -> None:
        with pytest.raises(ParameterViolationError):
            transpose(ges_5_4_2)
