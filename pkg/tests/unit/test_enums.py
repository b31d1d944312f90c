"""
Tests for eulersense enums.
"""

from eulersense.enums import (
    Axiom,
    CoherenceMethod,
    Family,
    GramPattern,
    MatrixFormat,
    Solver,
    ValueDistribution,
)


class TestEnums:
    def test_values_are_strings(self) -> None:
        assert Family.ES == "es"
        assert Solver.BOMP == "bomp"
        assert ValueDistribution.RADEMACHER == "rademacher"
        assert MatrixFormat.MATRIX_MARKET == "mtx"
        assert MatrixFormat.NATIVE == "phi-json"

    def test_round_trip_from_value(self) -> None:
        assert CoherenceMethod("numeric") is CoherenceMethod.NUMERIC
        assert GramPattern("hollow_ones") is GramPattern.HOLLOW_ONES

    def test_axioms_in_order(self) -> None:
        assert [a.value for a in Axiom] == ["GES1", "GES2", "GES3", "GES4"]
