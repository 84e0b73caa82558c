"""JSON readers and writers for semigroups, subsets and collections.

Inline CLI literals use the same grammar as files: a subset is a JSON array
of element indices, a collection is {"sets": [...]} or just the bare list
of sets.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .bits import from_elements
from .errors import ParseError
from .families import Collection, _check_n
from .semigroup import FiniteSemigroup, validate_cayley


def _loads(text: str, source: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(source, exc.pos, exc.msg) from None


def read_json(path: str | Path) -> Any:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ParseError(str(p), 0, f"cannot read file: {exc.strerror}") from None
    return _loads(text, str(p))


def _is_index(v: Any) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def semigroup_from_json(data: Any, source: str = "<input>") -> FiniteSemigroup:
    if isinstance(data, list):
        data = {"table": data}
    if not isinstance(data, dict) or "table" not in data:
        raise ParseError(source, 0, 'expected an object with a "table" field')
    table = data["table"]
    if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
        raise ParseError(source, 0, '"table" must be a list of rows')
    name = data.get("name")
    labels = data.get("elements")
    if name is not None and not isinstance(name, str):
        raise ParseError(source, 0, '"name" must be a string')
    if labels is not None and not (isinstance(labels, list) and all(isinstance(x, str) for x in labels)):
        raise ParseError(source, 0, '"elements" must be a list of strings')
    return validate_cayley(len(table), table, name=name, labels=labels)


def load_semigroup(path: str | Path) -> FiniteSemigroup:
    return semigroup_from_json(read_json(path), str(path))


def subset_from_json(data: Any, n: int, source: str = "<input>") -> int:
    if not isinstance(data, list) or not all(_is_index(x) for x in data):
        raise ParseError(source, 0, "a subset is a list of element indices")
    for x in data:
        if not 0 <= x < n:
            raise ParseError(source, 0, f"element {x} is outside 0..{n - 1}")
    return from_elements(data)


def collection_from_json(data: Any, n: int, source: str = "<input>") -> Collection:
    if isinstance(data, dict):
        if "sets" not in data:
            raise ParseError(source, 0, 'expected a "sets" field')
        data = data["sets"]
    if not isinstance(data, list):
        raise ParseError(source, 0, "a collection is a list of subsets")
    _check_n(n)
    return Collection.from_sets(n, [subset_from_json(s, n, source) for s in data])


def parse_subset(text: str, n: int, source: str = "<inline>") -> int:
    return subset_from_json(_loads(text, source), n, source)


def parse_collection(text: str, n: int, source: str = "<inline>") -> Collection:
    return collection_from_json(_loads(text, source), n, source)


def collection_arg(value: str, n: int) -> Collection:
    """An inline literal, or a path to a collection file."""
    stripped = value.lstrip()
    if stripped.startswith("[") or stripped.startswith("{"):
        return parse_collection(value, n)
    return collection_from_json(read_json(value), n, value)


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
