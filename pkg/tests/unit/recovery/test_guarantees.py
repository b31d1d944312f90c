"""
Tests for the greedy recovery guarantees.
"""

from fractions import Fraction

import pytest

from eulersense.enums import Family
from eulersense.errors import HypothesisViolatedError, ParameterViolationError
from eulersense.recovery.guarantees import bomp_guarantee, largest_below


class TestLargestBelow:
    @pytest.mark.parametrize(
        ("bound", "expected"),
        [(Fraction(9, 4), 2), (Fraction(1), 0), (Fraction(7, 2), 3), (3.0, 2)],
    )
    def test_strictly_below(self, bound: Fraction | float, expected: int) -> None:
        assert largest_below(bound) == expected


class TestBompGuarantee:
    def test_euler_square(self) -> None:
        report = bomp_guarantee(7, 2)
        assert report.family == Family.ES
        assert report.bound.to_fraction() == Fraction(9, 4)
        assert report.s_star == 2
        assert not report.vacuous

    def test_vacuous_ges(self) -> None:
        report = bomp_guarantee(4, 2, t=2)
        assert report.family == Family.GES
        assert report.s_star == 0
        assert report.vacuous

    def test_omp_case(self) -> None:
        assert bomp_guarantee(6, 1).s_star == 3

    def test_ges_with_t_one_matches_es(self) -> None:
        assert bomp_guarantee(6, 2, family=Family.GES).bound == bomp_guarantee(6, 2).bound

    def test_measured_block_coherence(self) -> None:
        report = bomp_guarantee(6, 1, mu_b=Fraction(1, 6))
        assert report.generic_bound == pytest.approx(3.5)
        assert report.generic_s_star == 3

    def test_block_longer_than_k(self) -> None:
        with pytest.raises(HypothesisViolatedError):
            bomp_guarantee(3, 4)

    def test_ges_block_limit(self) -> None:
        with pytest.raises(HypothesisViolatedError):
            bomp_guarantee(5, 3, t=2)

    def test_es_with_degree_two(self) -> None:
        with pytest.raises(ParameterViolationError):
            bomp_guarantee(5, 1, t=2, family=Family.ES)

    @pytest.mark.parametrize("mu_b", [0, -0.5])
    def test_nonpositive_block_coherence(self, mu_b: float) -> None:
        with pytest.raises(ParameterViolationError):
            bomp_guarantee(6, 1, mu_b=mu_b)
