"""Line-oriented "key: value" documents used by certificate and witness files."""

from __future__ import annotations


class DocumentError(ValueError):
    """Malformed document: bad framing, unknown format line, missing fields."""


def emit_document(pairs: list[tuple[str, str]]) -> str:
    return "".join(f"{key}: {value}\n" for key, value in pairs)


def parse_document(text: str) -> list[tuple[str, str]]:
    """Parse into ordered (key, value) pairs; blank lines are allowed."""
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep or not key.strip():
            raise DocumentError(f"line {lineno}: expected 'key: value', got {raw!r}")
        pairs.append((key.strip(), value.strip()))
    if not pairs:
        raise DocumentError("empty document")
    return pairs


def take_field(fields: dict[str, str], key: str) -> str:
    try:
        return fields.pop(key)
    except KeyError:
        raise DocumentError(f"missing field {key!r}") from None
