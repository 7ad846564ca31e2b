"""Loading of game components from JSON data files.

Schema: a top-level array of entries
``{"kind": ..., "name": ..., "properties": {...}, "count": n}``
where ``count`` defaults to 1. Game data files live under ``data/<game>/``;
the ``TAG_DATA_DIR`` environment variable overrides the data directory.
"""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Union

from .components import Card, Component, Counter, Die, Token
from .errors import ComponentDataError

_KINDS = {"card", "counter", "token", "die"}


def data_dir() -> Path:
    """Resolve the game-data directory."""
    override = os.environ.get("TAG_DATA_DIR")
    if override:
        return Path(override)
    here = Path.cwd() / "data"
    if here.is_dir():
        return here
    # Editable/source checkout: data/ sits next to src/.
    repo = Path(__file__).resolve().parents[3] / "data"
    return repo


def data_path(game: str, filename: str) -> Path:
    return data_dir() / game / filename


def _build_component(entry: dict, index: int) -> Component:
    kind = entry.get("kind")
    if kind not in _KINDS:
        raise ComponentDataError(
            f"entry {index}: unknown component kind {kind!r} "
            f"(expected one of {sorted(_KINDS)})")
    name = entry.get("name", "")
    props = entry.get("properties", {})
    if not isinstance(props, dict):
        raise ComponentDataError(f"entry {index}: properties must be an object")
    if kind == "card":
        return Card(name, props)
    if kind == "token":
        return Token(name, position=props.get("position"))
    if kind == "die":
        return Die(int(props.get("sides", 6)))
    return Counter(int(props.get("min", 0)), int(props.get("max", 0)),
                   int(props.get("value", 0)), name=name)


def load_json_components(path: Union[str, Path]) -> list[Component]:
    """Parse a component data file into a list of fresh components.

    Ids are assigned later, on registration with a game state.
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ComponentDataError(f"cannot read {path}: {exc}") from exc
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ComponentDataError(
            f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: "
            f"{exc.msg}") from exc
    if not isinstance(raw, list):
        raise ComponentDataError(f"{path}: top level must be an array")
    components: list[Component] = []
    for i, entry in enumerate(raw):
        if not isinstance(entry, dict):
            raise ComponentDataError(f"{path}: entry {i} must be an object")
        count = entry.get("count", 1)
        if not isinstance(count, int) or count < 0:
            raise ComponentDataError(
                f"{path}: entry {i} has invalid count {count!r}")
        for _ in range(count):
            components.append(_build_component(entry, i))
    return components
