"""Canonical JSON rendering shared by the CLI and the HTTP gateway.

Both surfaces must emit byte-identical machine output for the same inputs,
so every payload goes through this one serializer: 2-space indent, keys in
documented schema order (insertion order of the payload dicts), UTF-8, and
a trailing newline.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import DocumentParseError, InvalidRequestError


def canonical_json(payload) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def canonical_json_bytes(payload) -> bytes:
    return canonical_json(payload).encode("utf-8")


def read_json_document(path: str | Path) -> dict:
    """Load a JSON file, mapping failures to domain errors."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise DocumentParseError(str(path), "file not found")
    except OSError as exc:
        raise DocumentParseError(str(path), str(exc))
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentParseError(str(path), exc.msg, line=exc.lineno)
    if not isinstance(doc, dict):
        raise DocumentParseError(str(path), "top-level value must be an object")
    return doc


def parse_json_body(raw: bytes) -> dict:
    """Parse an HTTP request body as a JSON object."""
    try:
        doc = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise InvalidRequestError(f"request body is not valid JSON: {exc}")
    if not isinstance(doc, dict):
        raise InvalidRequestError("request body must be a JSON object")
    return doc
