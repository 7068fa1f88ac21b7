"""Group files: ``{"degree": n, "generators": [...]}`` with 1-indexed points.

A generator is either a cycle string such as ``"(1 2 3)(4 5)"`` or an
image array ``[2, 3, 1, 5, 4]``.  Built-in names (``alt5``, ``psl27``, ...)
resolve to files shipped with the package.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .config import Caps
from .errors import InputError
from .group import PermGroup
from .perm import Permutation, format_cycles, parse_cycles


def group_from_dict(obj, caps: Caps | None = None, where: str = "group") -> PermGroup:
    if not isinstance(obj, dict) or "degree" not in obj or "generators" not in obj:
        raise InputError(f"{where}: expected an object with 'degree' and 'generators'")
    degree = obj["degree"]
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
        raise InputError(f"{where}: degree must be a positive integer")
    gens = []
    for i, g in enumerate(obj["generators"]):
        label = f"{where}: generator {i + 1}"
        if isinstance(g, str):
            try:
                gens.append(parse_cycles(g, degree))
            except InputError as exc:
                raise InputError(f"{label}: {exc}") from None
        elif isinstance(g, list):
            if len(g) != degree or not all(isinstance(v, int) for v in g):
                raise InputError(f"{label}: image array must list {degree} integers")
            try:
                gens.append(Permutation([v - 1 for v in g]))
            except (ValueError, InputError) as exc:
                raise InputError(f"{label}: {exc}") from None
        else:
            raise InputError(f"{label}: expected a cycle string or an image array")
    return PermGroup(degree, gens, caps=caps)


def group_to_dict(G: PermGroup) -> dict:
    return {
        "degree": G.degree,
        "generators": [format_cycles(Permutation(g, check=False)) for g in G.gen_tuples],
    }


def dumps_group(G: PermGroup) -> str:
    return json.dumps(group_to_dict(G), indent=1) + "\n"


def write_group(path, G: PermGroup) -> None:
    Path(path).write_text(dumps_group(G))


@lru_cache(maxsize=None)
def _builtin_table() -> dict:
    text = resources.files("ppcover.data").joinpath("builtins.json").read_text()
    return json.loads(text)


def builtin_names() -> list[str]:
    return sorted(_builtin_table())


def builtin_group(name: str, caps: Caps | None = None) -> PermGroup:
    table = _builtin_table()
    if name not in table:
        raise InputError(f"unknown built-in group {name!r}")
    return group_from_dict(table[name], caps, where=name)


def load_group(source: str, caps: Caps | None = None) -> PermGroup:
    """A path to a group file, or the name of a built-in group."""
    path = Path(source)
    if path.is_file():
        try:
            obj = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise InputError(f"{source}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
        return group_from_dict(obj, caps, where=source)
    if source in _builtin_table():
        return builtin_group(source, caps)
    raise InputError(f"{source}: no such file or built-in group")


def load_corpus() -> list[tuple[str, PermGroup]]:
    text = resources.files("ppcover.data").joinpath("transitive_corpus.json").read_text()
    data = json.loads(text)
    return [(r["name"], group_from_dict(r, where=r["name"])) for r in data["groups"]]
