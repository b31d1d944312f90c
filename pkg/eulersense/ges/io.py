"""
JSON export and import of GES arrays (``.ges.json``).

Layout::

    {
      "content_hash": "sha256:…",
      "entries": [
        [0,0],
        [1,2],
        …
      ],
      "format": "eulersense.ges",
      "k": 2,
      "n": 3,
      "provenance": {…},
      "run_config": {…},
      "t": 1,
      "version": 1
    }

``entries`` lists the ``n^{t+1}`` tuples row-major, one per line.
"""

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
from eulersense.errors import EulerSenseError, ParseError
from eulersense.ges.models import GesArray, Provenance

logger = logging.getLogger(__name__)

GES_FORMAT = "eulersense.ges"
GES_VERSION = 1


class GesDocument(BaseModel):
    """On-disk form of a :class:`~eulersense.ges.models.GesArray`."""

    format: Literal["eulersense.ges"] = GES_FORMAT
    version: int = Field(default=GES_VERSION, ge=1, le=GES_VERSION)
    n: int
    k: int
    t: int
    provenance: Provenance
    entries: list[list[int]]
    run_config: dict[str, Any] | None = None
    content_hash: str | None = None


def ges_document(g: GesArray, run_config: dict[str, Any] | None = None) -> dict[str, Any]:
    """Return the hashed JSON payload for ``g``."""
    payload: dict[str, Any] = {
        "format": GES_FORMAT,
        "version": GES_VERSION,
        "n": g.n,
        "k": g.k,
        "t": g.t,
        "provenance": g.provenance.model_dump(mode="json"),
        "entries": [list(cell) for cell in g.cells],
    }
    if run_config is not None:
        payload["run_config"] = run_config
    return with_content_hash(payload)


def export_ges(
    g: GesArray, path: str | Path, run_config: dict[str, Any] | None = None
) -> str:
    """
    Write ``g`` to ``path`` as ``.ges.json``.

    Args:
        g: Array to write.
        path: Destination file.
        run_config: Optional run configuration echoed into the file.

    Returns:
        The content hash embedded in the file.
    """
    path = Path(path)
    payload = ges_document(g, run_config)
    path.write_text(render_json(payload, row_keys=("entries",)), encoding="utf-8")
    logger.info("Wrote GES(%d,%d,%d) to %s", g.n, g.k, g.t, path)
    return str(payload["content_hash"])


def import_ges(path: str | Path) -> GesArray:
    """
    Read a ``.ges.json`` file.

    Raises:
        ParseError: If the file is not valid JSON or does not describe a GES array.
    """
    path = Path(path)
    payload = read_json(path)
    try:
        document = GesDocument.model_validate(payload)
    except ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(part) for part in first["loc"])
        raise ParseError(f"{where}: {first['msg']}", path=str(path)) from exc
    check_content_hash(payload, path)
    try:
        return GesArray(
            n=document.n,
            k=document.k,
            t=document.t,
            cells=tuple(tuple(entry) for entry in document.entries),
            provenance=document.provenance,
        )
    except EulerSenseError as exc:
        raise ParseError(exc.message, path=str(path)) from exc
