"""
Tests for content hashing and JSON helpers.
"""

import json
import logging
from pathlib import Path

import pytest

from eulersense._internal.hashing import (
    canonical_json,
    check_content_hash,
    content_hash,
    read_json,
    render_json,
    with_content_hash,
)
from eulersense.errors import ParseError


class TestContentHash:
    def test_canonical_json_sorts_keys(self) -> None:
        assert canonical_json({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'

    def test_hash_ignores_existing_hash(self) -> None:
        payload = {"a": 1}
        hashed = with_content_hash(payload)
        assert hashed["content_hash"].startswith("sha256:")
        assert content_hash(hashed) == hashed["content_hash"]

    def test_hash_depends_on_content(self) -> None:
        assert content_hash({"a": 1}) != content_hash({"a": 2})

    def test_hash_ignores_key_order(self) -> None:
        assert content_hash({"a": 1, "b": 2}) == content_hash({"b": 2, "a": 1})


class TestRenderJson:
    def test_row_keys_one_per_line(self) -> None:
        text = render_json({"b": [[1, 2], [3]], "a": 1}, row_keys=("b",))
        assert text == '{\n  "a": 1,\n  "b": [\n    [1,2],\n    [3]\n  ]\n}\n'

    def test_parses_back(self) -> None:
        payload = {"x": {"y": [1, 2]}, "rows": [[0, 1], [2, 3]]}
        assert json.loads(render_json(payload, row_keys=("rows",))) == payload


class TestReadJson:
    def test_reads_object(self, tmp_path: Path) -> None:
        path = tmp_path / "doc.json"
        path.write_text('{"a": 1}')
        assert read_json(path) == {"a": 1}

    def test_syntax_error_has_line(self, tmp_path: Path) -> None:
        path = tmp_path / "bad.json"
        path.write_text('{\n  "a": 1,\n  "b": \n}')
        with pytest.raises(ParseError) as exc_info:
            read_json(path)

        assert exc_info.value.line == 4
        assert str(path) in exc_info.value.message

    def test_non_object(self, tmp_path: Path) -> None:
        path = tmp_path / "list.json"
        path.write_text("[1, 2]")
        with pytest.raises(ParseError) as exc_info:
            read_json(path)

        assert exc_info.value.line == 1

    def test_missing_file(self, tmp_path: Path) -> None:
        with pytest.raises(ParseError):
            read_json(tmp_path / "missing.json")

    def test_not_utf8(self, tmp_path: Path) -> None:
        path = tmp_path / "latin1.json"
        path.write_bytes(b'{"n": "\xff"}\n')
        with pytest.raises(ParseError) as exc_info:
            read_json(path)

        assert exc_info.value.path == str(path)
        assert "byte 7 is 0xff" in exc_info.value.message


class TestCheckContentHash:
    def test_matching_hash(self, tmp_path: Path) -> None:
        assert check_content_hash(with_content_hash({"a": 1}), tmp_path)

    def test_missing_hash_is_accepted(self, tmp_path: Path) -> None:
        assert check_content_hash({"a": 1}, tmp_path)

    def test_mismatch_warns(self, tmp_path: Path, caplog: pytest.LogCaptureFixture) -> None:
        payload = {**with_content_hash({"a": 1}), "a": 2}
        with caplog.at_level(logging.WARNING):
            assert not check_content_hash(payload, tmp_path)

        assert "content hash" in caplog.text
