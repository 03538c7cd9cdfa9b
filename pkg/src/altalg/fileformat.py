"""JSON algebra files.

Layout::

    {
      "name": "octonions",
      "field": {"kind": "Q"} | {"kind": "GFp", "p": 3},
      "dim": 8,
      "basis": ["e0", ...],
      "unit_index": 0,                 # when the unit is a basis vector
      "unit": ["1", "0", ...],         # otherwise, when a unit exists
      "entries": [[i, j, k, "c"], ...] # e_i e_j has coefficient c on e_k
    }

Scalars are strings ("-1", "5/6"); omitted table entries are zero.
"""
from __future__ import annotations

import json
from pathlib import Path

from .core import StructureConstants
from .errors import InvalidStructure
from .scalars import FieldSpec


def to_dict(a: StructureConstants) -> dict:
    fmt = a.field.format
    d = {
        "name": a.name,
        "field": a.field.descriptor(),
        "dim": a.dim,
        "basis": list(a.basis_names),
    }
    if a.unit_index is not None:
        d["unit_index"] = a.unit_index
    elif a.unit is not None:
        d["unit"] = [fmt(c) for c in a.unit]
    d["entries"] = [[i, j, k, fmt(c)] for i, j, k, c in a.entries()]
    return d


def from_dict(d: dict) -> StructureConstants:
    try:
        field = FieldSpec.from_descriptor(d["field"])
        dim = int(d["dim"])
        entries = []
        for e in d["entries"]:
            i, j, k, c = e
            if not all(isinstance(v, int) and not isinstance(v, bool) for v in (i, j, k)):
                raise InvalidStructure(f"table indices must be integers: {e!r}")
            if not isinstance(c, str):
                raise InvalidStructure(f"scalars must be strings: {e!r}")
            entries.append((i, j, k, field.parse_scalar(c)))
        unit = None
        if "unit_index" in d:
            unit = int(d["unit_index"])
            if not 0 <= unit < dim:
                raise InvalidStructure(f"unit_index {unit} out of range")
        elif "unit" in d:
            unit = tuple(field.parse_scalar(c) for c in d["unit"])
        return StructureConstants(d.get("name", "algebra"), field, dim, entries, d.get("basis"), unit)
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidStructure(f"malformed algebra file: {exc}") from exc


def dumps(a: StructureConstants) -> str:
    return json.dumps(to_dict(a), indent=1) + "\n"


def loads(text: str) -> StructureConstants:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidStructure(f"not valid JSON: {exc}") from exc
    if not isinstance(d, dict):
        raise InvalidStructure("top-level JSON value must be an object")
    return from_dict(d)


def save_algebra(a: StructureConstants, path: str | Path) -> None:
    Path(path).write_text(dumps(a))


def load_algebra(path: str | Path) -> StructureConstants:
    return loads(Path(path).read_text())
