"""The JSON poset document format.

A document is a small JSON object::

    {
      "name": "fig5_butterfly",
      "elements": ["y1", "x1", "y2", "z", "x2"],
      "covers": [["y1", "x1"], ["y2", "z"], ...],
      "expected": {"is_level": true}          # optional self-test block
    }

Labels are compared as exact strings.  ``expected`` keys must be
classification-report fields.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from .canonical import ClassificationReport
from .errors import ParseError
from .posets import Poset, build_poset

_REPORT_FIELDS = set(ClassificationReport.__dataclass_fields__)


@dataclass
class PosetDocument:
    name: str
    elements: list[str]
    covers: list[tuple[str, str]]
    expected: dict[str, Any] = field(default_factory=dict)

    def to_poset(self) -> Poset:
        return build_poset(self.elements, self.covers)

    def to_json(self) -> str:
        doc: dict[str, Any] = {
            "name": self.name,
            "elements": list(self.elements),
            "covers": [list(c) for c in self.covers],
        }
        if self.expected:
            doc["expected"] = dict(sorted(self.expected.items()))
        return json.dumps(doc, indent=2) + "\n"


def document_from_poset(p: Poset, name: str, expected: Optional[dict] = None) -> PosetDocument:
    return PosetDocument(
        name=name,
        elements=[str(x) for x in p.labels],
        covers=[(str(p.labels[lo]), str(p.labels[hi])) for lo, hi in p.cover_indices],
        expected=dict(expected or {}),
    )


def parse_document(text: str, origin: str = "<string>") -> PosetDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{origin}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from exc
    if not isinstance(raw, dict):
        raise ParseError(f"{origin}: document must be a JSON object")

    name = raw.get("name", "")
    if not isinstance(name, str):
        raise ParseError(f"{origin}: field 'name' must be a string")
    elements = raw.get("elements")
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise ParseError(f"{origin}: field 'elements' must be a list of strings")
    covers_raw = raw.get("covers", [])
    if not isinstance(covers_raw, list):
        raise ParseError(f"{origin}: field 'covers' must be a list of [lower, upper] pairs")
    covers: list[tuple[str, str]] = []
    for k, pair in enumerate(covers_raw):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(s, str) for s in pair)
        ):
            raise ParseError(f"{origin}: covers[{k}] must be a pair of label strings")
        covers.append((pair[0], pair[1]))
    expected = raw.get("expected", {})
    if not isinstance(expected, dict):
        raise ParseError(f"{origin}: field 'expected' must be an object")
    for key in expected:
        if key not in _REPORT_FIELDS:
            raise ParseError(f"{origin}: expected key {key!r} is not a report field")
    unknown = set(raw) - {"name", "elements", "covers", "expected"}
    if unknown:
        raise ParseError(f"{origin}: unknown fields {sorted(unknown)}")
    return PosetDocument(name, elements, covers, expected)


def parse_poset(source: str | Path, *, is_path: Optional[bool] = None) -> Poset:
    """Parse a document from a path or raw text and build the poset.

    Construction errors are re-raised as :class:`ParseError` with the
    origin attached.
    """
    if is_path is None:
        is_path = isinstance(source, Path)
    if is_path:
        origin = str(source)
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as exc:
            raise ParseError(f"{origin}: {exc}") from exc
    else:
        origin, text = "<string>", str(source)
    doc = parse_document(text, origin)
    try:
        return doc.to_poset()
    except Exception as exc:
        raise ParseError(f"{origin}: {exc}") from exc
