"""
End-to-end tests of the ``eulersense`` command.
"""

import json
from pathlib import Path

import pytest

from eulersense.cli.main import build_parser, main


def _run(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _construct(tmp_path: Path, n: int, k: int, t: int = 1) -> Path:
    path = tmp_path / f"ges_{n}_{k}_{t}.ges.json"
    assert main(["construct", "--n", str(n), "--k", str(k), "--t", str(t), "-o", str(path)]) == 0
    return path


class TestParser:
    def test_version(self, capsys: pytest.CaptureFixture[str]) -> None:
        with pytest.raises(SystemExit) as exc_info:
            build_parser().parse_args(["--version"])

        assert exc_info.value.code == 0
        assert capsys.readouterr().out.startswith("eulersense ")

    def test_matrix_needs_output(self, tmp_path: Path) -> None:
        with pytest.raises(SystemExit) as exc_info:
            main(["matrix", str(tmp_path / "x.ges.json")])

        assert exc_info.value.code == 2


class TestConstruct:
    def test_stdout_document(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, _ = _run(capsys, "construct", "--n", "3", "--k", "2")
        assert code == 0
        payload = json.loads(out)
        assert payload["format"] == "eulersense.ges"
        assert payload["entries"][:3] == [[0, 0], [1, 2], [2, 1]]
        assert payload["run_config"] == {"command": "construct", "n": 3, "k": 2, "t": 1}

    def test_file_output(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        path = tmp_path / "es.ges.json"
        code, out, _ = _run(capsys, "construct", "--n", "15", "--k", "2", "-o", str(path))
        assert code == 0
        assert path.exists()
        assert "components [3, 5]" in out
        assert "sha256:" in out

    def test_blocked_component(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, err = _run(capsys, "construct", "--n", "6", "--k", "2")
        assert code == 2
        assert out == ""
        assert "Component 2" in err

    def test_invalid_k(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, _, err = _run(capsys, "construct", "--n", "7", "--k", "1")
        assert code == 2
        assert "k:" in err

    def test_sampled_verification(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, _, _ = _run(
            capsys, "construct", "--n", "7", "--k", "3", "--t", "2", "--sample-pairs", "1000"
        )
        assert code == 0

    def test_negative_thread_env(
        self, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
    ) -> None:
        monkeypatch.setenv("GES_THREADS", "-2")
        code, _, err = _run(capsys, "construct", "--n", "3", "--k", "2")
        assert code == 0
        assert "GES_THREADS" in err


class TestMatrix:
    def test_matrix_market(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        ges = _construct(tmp_path, 7, 6)
        capsys.readouterr()
        out_path = tmp_path / "phi.mtx"
        code, out, _ = _run(capsys, "matrix", str(ges), "-o", str(out_path))
        assert code == 0
        assert out_path.exists()
        assert (tmp_path / "phi.meta.json").exists()
        assert out.startswith("Φ(7,6,1): 42×49")

    def test_corrupt_input(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        ges = _construct(tmp_path, 3, 2)
        ges.write_text(ges.read_text()[:-20])
        code, _, err = _run(capsys, "matrix", str(ges), "-o", str(tmp_path / "phi.phi.json"))
        assert code == 3
        assert str(ges) in err

    def test_missing_input(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        code, _, _ = _run(
            capsys, "matrix", str(tmp_path / "nope.ges.json"), "-o", str(tmp_path / "phi.mtx")
        )
        assert code == 3

    def test_input_not_utf8(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        ges = tmp_path / "bad.ges.json"
        ges.write_bytes(b'{"n": "\xff"}\n')
        code, _, err = _run(capsys, "matrix", str(ges), "-o", str(tmp_path / "phi.mtx"))
        assert code == 3
        assert str(ges) in err
        assert "UTF-8" in err


class TestAnalyze:
    def _matrix(self, tmp_path: Path, name: str) -> Path:
        ges = _construct(tmp_path, 7, 6)
        path = tmp_path / name
        assert main(["matrix", str(ges), "-o", str(path)]) == 0
        return path

    def test_certified(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        phi = self._matrix(tmp_path, "phi.mtx")
        capsys.readouterr()
        code, out, _ = _run(capsys, "analyze", str(phi), "--d", "1")
        assert code == 0
        payload = json.loads(out)
        assert payload["certified"]
        assert payload["report"]["coherence"]["mu"] == {"num": 1, "den": 6}
        assert payload["report"]["block_coherence"]["method"] == "structural"

    def test_hand_edited_matrix(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        phi = self._matrix(tmp_path, "phi.phi.json")
        payload = json.loads(phi.read_text())
        payload["columns"][8] = payload["columns"][0]
        phi.write_text(json.dumps(payload))
        capsys.readouterr()
        code, out, err = _run(capsys, "analyze", str(phi))
        assert code == 5
        assert not json.loads(out)["certified"]
        assert "coherence" in err

    def test_columns_off_their_bands(
        self, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        ges = _construct(tmp_path, 3, 2)
        phi = tmp_path / "phi.phi.json"
        assert main(["matrix", str(ges), "-o", str(phi)]) == 0
        payload = json.loads(phi.read_text())
        # block 0 re-paired: columns 0 and 1 each put both ones in one band
        payload["columns"][:3] = [[0, 1], [3, 4], [2, 5]]
        phi.write_text(json.dumps(payload))
        capsys.readouterr()
        code, out, err = _run(capsys, "analyze", str(phi), "--d", "1")
        assert code == 5
        report = json.loads(out)
        assert not report["certified"]
        assert report["report"]["band_witness"] == 0
        assert "column 0" in err

    def test_bad_block_length(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        phi = self._matrix(tmp_path, "phi.mtx")
        code, _, _ = _run(capsys, "analyze", str(phi), "--d", "2")
        assert code == 2

    def test_report_file(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        phi = self._matrix(tmp_path, "phi.mtx")
        report = tmp_path / "analysis.json"
        capsys.readouterr()
        code, out, _ = _run(capsys, "analyze", str(phi), "-o", str(report))
        assert code == 0
        assert json.loads(report.read_text())["format"] == "eulersense.analysis"
        assert "coherence μ" in out


class TestRecover:
    def test_flags_only(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, _ = _run(
            capsys, "recover", "--n", "4", "--k", "3", "--d", "2", "--s", "1", "--exhaustive"
        )
        assert code == 0
        stats = json.loads(out)["stats"]
        assert (stats["trials"], stats["exact_successes"]) == (8, 8)
        assert "outcomes" not in stats

    def test_config_file_with_override(
        self, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        config = tmp_path / "experiment.json"
        config.write_text(json.dumps({"n": 5, "k": 4, "s": 2, "trials": 5, "solver": "omp"}))
        code, out, _ = _run(capsys, "recover", str(config), "--seed", "3", "--outcomes")
        assert code == 0
        stats = json.loads(out)["stats"]
        assert stats["config"]["seed"] == 3
        assert stats["config"]["solver"] == "omp"
        assert len(stats["outcomes"]) == 5

    def test_omp_with_blocks(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, _, err = _run(
            capsys, "recover", "--n", "8", "--k", "7", "--d", "2", "--s", "1", "--solver", "omp"
        )
        assert code == 2
        assert "d=1" in err

    def test_missing_fields(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, _, _ = _run(capsys, "recover", "--n", "8")
        assert code == 2


class TestSelftest:
    def test_passes_and_is_stable(self, capsys: pytest.CaptureFixture[str]) -> None:
        first = _run(capsys, "selftest")
        second = _run(capsys, "selftest")
        assert first[0] == 0
        assert first[1] == second[1]
        assert json.loads(first[1])["passed"]

    def test_mutation_fails(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, err = _run(capsys, "selftest", "--mutate", "composition")
        assert code == 1
        assert "GES4" in out
        assert "grid.ges_15_2_1" in err
