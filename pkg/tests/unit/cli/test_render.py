"""
Tests for terminal tables.
"""

from eulersense.analysis.report import analyze_matrix
from eulersense.cli.render import (
    format_table,
    render_analysis,
    render_ges,
    render_matrix,
    render_selftest,
)
from eulersense.cli.selftest import SelftestCheck
from eulersense.ges.models import GesArray
from eulersense.ges.verify import verify_ges
from eulersense.matrix.models import BinarySensingMatrix


class TestFormatTable:
    def test_alignment(self) -> None:
        text = format_table(("a", "long header"), [(1, "x"), (22, "yy")])
        assert text.splitlines() == [
            "a   long header",
            "--  -----------",
            "1   x",
            "22  yy",
        ]


class TestRenderers:
    def test_ges(self, es_3_2: GesArray) -> None:
        text = render_ges(es_3_2, verify_ges(es_3_2))
        assert text.startswith("GES(3,2,1): 3 x 3 array, components [3]")
        assert "GES4 overall" in text

    def test_matrix(self, phi_3_2_1: BinarySensingMatrix) -> None:
        assert render_matrix(phi_3_2_1) == "Φ(3,2,1): 6×9, 18 nonzeros, density 2/6 = 1/3"

    def test_analysis(self, phi_7_6_1: BinarySensingMatrix) -> None:
        text = render_analysis(analyze_matrix(phi_7_6_1, d=1))
        assert "coherence μ" in text
        assert "1/6" in text
        assert "FAILED" not in text

    def test_selftest(self) -> None:
        checks = [
            SelftestCheck(name="one", passed=True),
            SelftestCheck(name="two", passed=False, detail="broken"),
        ]
        text = render_selftest(checks)
        assert "FAIL" in text
        assert text.endswith("1/2 checks passed")
