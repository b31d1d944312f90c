"""
Export and import of sensing matrices.

Two formats (see :class:`~eulersense.enums.MatrixFormat`):

``.mtx`` + ``.meta.json``
    Matrix Market coordinate pattern file, 1-based, entries column-major::

        %%MatrixMarket matrix coordinate pattern general
        % eulersense Φ(3,2,1)
        6 9 18
        1 1
        4 1
        2 2
        5 2
        …

    The sidecar holds ``n``, ``k``, ``t``, ``block_width``, provenance, the run
    configuration and the SHA-256 of the ``.mtx`` bytes.

``.phi.json``
    One JSON document with the same header and a ``columns`` list of 0-based
    row-index lists, one column per line.
"""

import hashlib
import logging
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, Field, ValidationError

from eulersense._internal.hashing import (
    check_content_hash,
    read_json,
    render_json,
    with_content_hash,
)
from eulersense.enums import MatrixFormat
from eulersense.errors import EulerSenseError, MetadataMismatchError, ParseError
from eulersense.ges.models import Provenance
from eulersense.matrix.models import BinarySensingMatrix

logger = logging.getLogger(__name__)

MM_BANNER = "%%MatrixMarket matrix coordinate pattern general"
META_FORMAT = "eulersense.mtx-meta"
PHI_FORMAT = "eulersense.phi"
FORMAT_VERSION = 1


class _Header(BaseModel):
    version: int = Field(default=FORMAT_VERSION, ge=1, le=FORMAT_VERSION)
    n: int
    k: int
    t: int
    rows: int
    cols: int
    block_width: int
    provenance: Provenance | None = None
    run_config: dict[str, Any] | None = None
    content_hash: str | None = None


class MatrixMeta(_Header):
    """Sidecar of a Matrix Market export."""

    format: Literal["eulersense.mtx-meta"] = META_FORMAT
    nnz: int
    mtx_sha256: str


class PhiDocument(_Header):
    """Native ``.phi.json`` document."""

    format: Literal["eulersense.phi"] = PHI_FORMAT
    columns: list[list[int]]


def sidecar_path(path: Path) -> Path:
    """``phi.mtx`` → ``phi.meta.json``."""
    return path.with_suffix(".meta.json")


def _header(m: BinarySensingMatrix, run_config: dict[str, Any] | None) -> dict[str, Any]:
    header: dict[str, Any] = {
        "version": FORMAT_VERSION,
        "n": m.n,
        "k": m.k,
        "t": m.t,
        "rows": m.rows,
        "cols": m.cols,
        "block_width": m.block_width,
        "provenance": m.provenance.model_dump(mode="json") if m.provenance else None,
    }
    if run_config is not None:
        header["run_config"] = run_config
    return header


def phi_document(
    m: BinarySensingMatrix, run_config: dict[str, Any] | None = None
) -> dict[str, Any]:
    """Return the hashed ``.phi.json`` payload for ``m``."""
    return with_content_hash(
        {**_header(m, run_config), "format": PHI_FORMAT, "columns": [list(c) for c in m.columns]}
    )


def matrix_market_text(m: BinarySensingMatrix) -> str:
    """Render ``m`` as a Matrix Market coordinate pattern file."""
    lines = [MM_BANNER, f"% eulersense Φ({m.n},{m.k},{m.t})", f"{m.rows} {m.cols} {m.nnz}"]
    for j, column in enumerate(m.columns, start=1):
        lines.extend(f"{i + 1} {j}" for i in column)
    return "\n".join(lines) + "\n"


def export_matrix(
    m: BinarySensingMatrix,
    path: str | Path,
    format: MatrixFormat = MatrixFormat.NATIVE,
    run_config: dict[str, Any] | None = None,
) -> str:
    """
    Write ``m`` to ``path``.

    Args:
        m: Matrix to write.
        path: ``.mtx`` or ``.phi.json`` destination. For Matrix Market the
              sidecar is written next to it.
        format: Output format.
        run_config: Optional run configuration echoed into the metadata.

    Returns:
        Content hash of the JSON document (the sidecar for Matrix Market).
    """
    path = Path(path)
    if format == MatrixFormat.MATRIX_MARKET:
        body = matrix_market_text(m).encode("utf-8")
        path.write_bytes(body)
        payload = with_content_hash(
            {
                **_header(m, run_config),
                "format": META_FORMAT,
                "nnz": m.nnz,
                "mtx_sha256": hashlib.sha256(body).hexdigest(),
            }
        )
        sidecar_path(path).write_text(render_json(payload), encoding="utf-8")
    else:
        payload = phi_document(m, run_config)
        path.write_text(render_json(payload, row_keys=("columns",)), encoding="utf-8")
    logger.info("Wrote %s to %s (%s)", m, path, format.value)
    return str(payload["content_hash"])


def _validate(model: type[_Header], payload: dict[str, Any], path: Path) -> Any:
    try:
        return model.model_validate(payload)
    except ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(part) for part in first["loc"])
        raise ParseError(f"{where}: {first['msg']}", path=str(path)) from exc


def _parse_ints(text: str, count: int, lineno: int, path: Path) -> list[int]:
    parts = text.split()
    if len(parts) != count:
        raise ParseError(
            f"expected {count} integers, got {text.strip()!r}", line=lineno, path=str(path)
        )
    try:
        return [int(part) for part in parts]
    except ValueError as exc:
        raise ParseError(
            f"not an integer in {text.strip()!r}", line=lineno, path=str(path)
        ) from exc


def _read_matrix_market(path: Path) -> tuple[tuple[int, int, int], list[list[int]]]:
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror}", path=str(path)) from exc
    except UnicodeDecodeError as exc:
        raise ParseError(
            f"not UTF-8 text: byte {exc.start} is {exc.object[exc.start]:#04x}", path=str(path)
        ) from exc
    if not lines or lines[0].strip().lower() != MM_BANNER.lower():
        raise ParseError(f"expected banner {MM_BANNER!r}", line=1, path=str(path))

    size: tuple[int, int, int] | None = None
    columns: list[list[int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip() or line.startswith("%"):
            continue
        if size is None:
            rows, cols, nnz = _parse_ints(line, 3, lineno, path)
            size = (rows, cols, nnz)
            columns = [[] for _ in range(cols)]
            continue
        i, j = _parse_ints(line, 2, lineno, path)
        if not (1 <= i <= size[0] and 1 <= j <= size[1]):
            raise ParseError(
                f"entry ({i}, {j}) outside {size[0]}×{size[1]}", line=lineno, path=str(path)
            )
        if (i, j) in seen:
            raise ParseError(f"duplicate entry ({i}, {j})", line=lineno, path=str(path))
        seen.add((i, j))
        columns[j - 1].append(i - 1)
    if size is None:
        raise ParseError("missing size line", line=len(lines), path=str(path))
    if len(seen) != size[2]:
        raise MetadataMismatchError(
            f"{path}: size line declares {size[2]} entries, found {len(seen)}."
        )
    return size, [sorted(column) for column in columns]


def _assemble(header: _Header, columns: list[list[int]], path: Path) -> BinarySensingMatrix:
    if len(columns) != header.cols:
        raise MetadataMismatchError(
            f"{path}: metadata declares {header.cols} columns, found {len(columns)}."
        )
    for j, column in enumerate(columns):
        if len(column) != header.k:
            raise MetadataMismatchError(
                f"{path}: column {j} has {len(column)} entries, metadata declares k={header.k}."
            )
    try:
        matrix = BinarySensingMatrix(
            n=header.n,
            k=header.k,
            t=header.t,
            columns=tuple(tuple(sorted(column)) for column in columns),
            block_width=header.block_width,
            provenance=header.provenance,
        )
    except EulerSenseError as exc:
        raise MetadataMismatchError(f"{path}: {exc.message}") from exc
    if matrix.rows != header.rows:
        raise MetadataMismatchError(
            f"{path}: metadata declares {header.rows} rows, expected {matrix.rows}."
        )
    return matrix


def import_matrix(path: str | Path) -> BinarySensingMatrix:
    """
    Read a matrix written by :func:`export_matrix`.

    ``.mtx`` files are read together with their ``.meta.json`` sidecar;
    anything else is read as ``.phi.json``.

    Raises:
        ParseError: Malformed file, with the 1-based line number when known.
        MetadataMismatchError: Metadata disagrees with the entries read
                               (column counts, dimensions, hashes).
    """
    path = Path(path)
    if path.suffix == ".mtx":
        meta_path = sidecar_path(path)
        payload = read_json(meta_path)
        meta: MatrixMeta = _validate(MatrixMeta, payload, meta_path)
        check_content_hash(payload, meta_path)
        (rows, cols, nnz), columns = _read_matrix_market(path)
        if (rows, cols, nnz) != (meta.rows, meta.cols, meta.nnz):
            raise MetadataMismatchError(
                f"{path}: size line {rows} {cols} {nnz} disagrees with sidecar "
                f"{meta.rows} {meta.cols} {meta.nnz}."
            )
        if hashlib.sha256(path.read_bytes()).hexdigest() != meta.mtx_sha256:
            logger.warning("%s: checksum differs from the one recorded in %s", path, meta_path)
        matrix = _assemble(meta, columns, path)
    else:
        payload = read_json(path)
        document: PhiDocument = _validate(PhiDocument, payload, path)
        check_content_hash(payload, path)
        matrix = _assemble(document, document.columns, path)
    logger.info("Read %s from %s", matrix, path)
    return matrix
