"""
Content hashing for output artifacts.

Artifacts embed ``sha256:<hex>`` of their canonical JSON payload (sorted keys,
compact separators, the hash field itself excluded) so identical runs produce
identical hashes.
"""

import hashlib
import json
import logging
from pathlib import Path
from typing import Any

from eulersense.errors import ParseError

logger = logging.getLogger(__name__)

HASH_FIELD = "content_hash"


def canonical_json(payload: Any) -> str:
    """Serialize ``payload`` deterministically."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def content_hash(payload: dict[str, Any]) -> str:
    """Return the content hash of ``payload``, ignoring any existing hash field."""
    body = {key: value for key, value in payload.items() if key != HASH_FIELD}
    digest = hashlib.sha256(canonical_json(body).encode("ascii")).hexdigest()
    return f"sha256:{digest}"


def with_content_hash(payload: dict[str, Any]) -> dict[str, Any]:
    """Return a copy of ``payload`` with its content hash attached."""
    return {**payload, HASH_FIELD: content_hash(payload)}


def render_json(payload: dict[str, Any], row_keys: tuple[str, ...] = ()) -> str:
    """
    Pretty-print a top-level object with sorted keys.

    Lists stored under ``row_keys`` are written one compact element per line,
    so large arrays stay readable and parse errors point at a useful line.
    """
    lines = ["{"]
    keys = sorted(payload)
    for position, key in enumerate(keys):
        comma = "," if position < len(keys) - 1 else ""
        value = payload[key]
        if key in row_keys and isinstance(value, list) and value:
            lines.append(f"  {json.dumps(key)}: [")
            rendered = [canonical_json(item) for item in value]
            lines.extend(f"    {item}," for item in rendered[:-1])
            lines.append(f"    {rendered[-1]}")
            lines.append(f"  ]{comma}")
        else:
            body = json.dumps(value, sort_keys=True, indent=2, ensure_ascii=True)
            body = body.replace("\n", "\n  ")
            lines.append(f"  {json.dumps(key)}: {body}{comma}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_json(path: Path) -> dict[str, Any]:
    """
    Load a JSON object from ``path``.

    Raises:
        ParseError: If the file is unreadable, not JSON, or not an object.
    """
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror}", path=str(path)) from exc
    except UnicodeDecodeError as exc:
        raise ParseError(
            f"not UTF-8 text: byte {exc.start} is {exc.object[exc.start]:#04x}", path=str(path)
        ) from exc
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, path=str(path)) from exc
    if not isinstance(payload, dict):
        raise ParseError("expected a JSON object", line=1, path=str(path))
    return payload


def check_content_hash(payload: dict[str, Any], path: Path) -> bool:
    """
    Compare an embedded content hash with the document body.

    A mismatch means the file was edited by hand. It is logged, not raised:
    edited artifacts stay loadable so their defects can be analysed.
    """
    recorded = payload.get(HASH_FIELD)
    if recorded is None or recorded == content_hash(payload):
        return True
    logger.warning("%s: content hash does not match the document body", path)
    return False
