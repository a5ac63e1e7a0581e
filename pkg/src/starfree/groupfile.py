"""Reading groups from JSON input files.

Two shapes are accepted, with exactly one of ``generators`` / ``cayley``::

    {"name": "S3", "degree": 3, "generators": [[[0, 1, 2]], [[0, 1]]]}
    {"name": "C2", "cayley": [[0, 1], [1, 0]]}

Generators are lists of cycles over the points ``0..degree-1``.
"""

from __future__ import annotations

import json
from pathlib import Path

from starfree.group import ORDER_BOUND, FiniteGroup, Permutation, from_cayley_table, from_permutation_generators


class GroupFileError(ValueError):
    pass


def group_from_json(doc: dict, *, bound: int = ORDER_BOUND) -> FiniteGroup:
    if not isinstance(doc, dict):
        raise GroupFileError("group file must hold a JSON object")
    has_gens, has_table = "generators" in doc, "cayley" in doc
    if has_gens == has_table:
        raise GroupFileError('exactly one of "generators" and "cayley" must be present')
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise GroupFileError('"name" must be a string')
    if has_table:
        return from_cayley_table(doc["cayley"], name)
    if "degree" not in doc:
        raise GroupFileError('"degree" is required with "generators"')
    degree = doc["degree"]
    if not isinstance(degree, int) or degree < 1:
        raise GroupFileError(f'"degree" must be a positive integer, got {degree!r}')
    try:
        gens = [Permutation.from_cycles(degree, cycles) for cycles in doc["generators"]]
    except (TypeError, ValueError) as exc:
        raise GroupFileError(f"bad generator: {exc}") from exc
    return from_permutation_generators(gens, name, bound=bound)


def read_group_file(path: str | Path, *, bound: int = ORDER_BOUND) -> FiniteGroup:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise GroupFileError(f"{path}: invalid JSON ({exc})") from exc
    return group_from_json(doc, bound=bound)
