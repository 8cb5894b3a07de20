"""JSON game files.

Every file carries ``version`` (currently 1), ``kind`` and ``n``, plus one
kind-specific payload:

``explicit``   ``preferences``: player id -> tiers, best first; each tier is a
               list of coalitions, each an ascending list of player ids.
               ``"tail": "bottom"`` puts every unlisted coalition in one
               indifference class below the listed ones.
``ashg``       ``values``: n x n integer matrix, row i holds v_i(j); diagonal 0.
``friends``,
``enemies``    ``adjacency``: player id -> list of liked players.
``bhedonic``   ``rankings``: player id -> strict order of all players 1..n
               (the player itself included), best first.

Optional metadata: ``name``, ``source``.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any

from .core import COALITION_CAP, HedonicError, PreferenceProfile, from_mask
from .gameclasses import AshgMatrix, BRanking, GameSpec, enemies_game, friends_game

VERSION = 1
FILE_KINDS = ("explicit", "ashg", "friends", "enemies", "bhedonic")


class GameFileError(HedonicError):
    """A game file violates the schema; the message names the field."""


def _require(doc: dict, key: str, where: str = "") -> Any:
    if key not in doc:
        raise GameFileError(f"{where}{key}: missing")
    return doc[key]


def _player_map(doc: dict, key: str, n: int) -> dict[int, Any]:
    raw = _require(doc, key)
    if not isinstance(raw, dict):
        raise GameFileError(f"{key}: expected an object keyed by player id")
    out = {}
    for k, v in raw.items():
        try:
            i = int(k)
        except ValueError:
            raise GameFileError(f"{key}.{k}: player ids must be integers") from None
        if not 1 <= i <= n:
            raise GameFileError(f"{key}.{k}: player id outside 1..{n}")
        out[i] = v
    return out


def _int_list(value: Any, where: str, n: int) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise GameFileError(f"{where}: expected a list of integers")
    if any(not 1 <= x <= n for x in value):
        raise GameFileError(f"{where}: player id outside 1..{n}")
    return value


def _explicit(doc: dict, n: int) -> PreferenceProfile:
    prefs = _player_map(doc, "preferences", n)
    tail = doc.get("tail")
    if tail not in (None, "bottom"):
        raise GameFileError(f"tail: expected \"bottom\", got {tail!r}")
    rankings = {}
    for i in range(1, n + 1):
        tiers = prefs.get(i, [])
        where = f"preferences.{i}"
        if not isinstance(tiers, list):
            raise GameFileError(f"{where}: expected a list of tiers")
        seen = set()
        out = []
        for t, tier in enumerate(tiers):
            if not isinstance(tier, list) or not tier:
                raise GameFileError(f"{where}[{t}]: expected a non-empty list of coalitions")
            row = []
            for c, coal in enumerate(tier):
                members = _int_list(coal, f"{where}[{t}][{c}]", n)
                if len(set(members)) != len(members) or members != sorted(members):
                    raise GameFileError(f"{where}[{t}][{c}]: members must be ascending and distinct")
                if i not in members:
                    raise GameFileError(f"{where}[{t}][{c}]: coalition missing owner {i}")
                key = frozenset(members)
                if key in seen:
                    raise GameFileError(f"{where}[{t}][{c}]: coalition listed twice")
                seen.add(key)
                row.append(members)
            out.append(row)
        if tail is None and len(seen) != 1 << (n - 1):
            missing = next(
                sorted(from_mask(m)) for m in range(1, 1 << n)
                if m >> (i - 1) & 1 and from_mask(m) not in seen
            )
            raise GameFileError(
                f"{where}: incomplete listing (e.g. {missing} missing); list every coalition or set \"tail\": \"bottom\""
            )
        rankings[i] = out
    return PreferenceProfile.from_rankings(n, rankings, tail=tail == "bottom")


def game_from_dict(doc: dict) -> GameSpec:
    if not isinstance(doc, dict):
        raise GameFileError("document: expected a JSON object")
    version = _require(doc, "version")
    if version != VERSION:
        raise GameFileError(f"version: unsupported {version!r} (expected {VERSION})")
    kind = _require(doc, "kind")
    if kind not in FILE_KINDS:
        raise GameFileError(f"kind: unknown {kind!r} (expected one of {', '.join(FILE_KINDS)})")
    n = _require(doc, "n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise GameFileError("n: expected a positive integer")
    if n > COALITION_CAP:
        raise GameFileError(f"n: {n} exceeds the cap of {COALITION_CAP} players")
    meta = {"name": doc.get("name"), "source": doc.get("source")}
    if kind == "explicit":
        return GameSpec("explicit", _explicit(doc, n), **meta)
    if kind == "ashg":
        values = _require(doc, "values")
        if not isinstance(values, list) or len(values) != n:
            raise GameFileError(f"values: expected {n} rows")
        for r, row in enumerate(values):
            if not isinstance(row, list) or len(row) != n or not all(
                isinstance(v, int) and not isinstance(v, bool) for v in row
            ):
                raise GameFileError(f"values[{r}]: expected {n} integers")
        return GameSpec("ashg", AshgMatrix(values), **meta)
    if kind in ("friends", "enemies"):
        adj = _player_map(doc, "adjacency", n)
        graph = {i: _int_list(adj.get(i, []), f"adjacency.{i}", n) for i in range(1, n + 1)}
        for i, nbrs in graph.items():
            if i in nbrs:
                raise GameFileError(f"adjacency.{i}: a player cannot list itself")
        build = friends_game if kind == "friends" else enemies_game
        adjacency = tuple(tuple(sorted(graph[i])) for i in range(1, n + 1))
        return GameSpec(kind, build(n, graph), adjacency=adjacency, **meta)
    ranks = _player_map(doc, "rankings", n)
    orders = []
    for i in range(1, n + 1):
        order = _int_list(_require(ranks, i, "rankings."), f"rankings.{i}", n)
        if sorted(order) != list(range(1, n + 1)):
            raise GameFileError(f"rankings.{i}: must be a strict order of all players 1..{n}")
        orders.append(order)
    return GameSpec("bhedonic", BRanking(orders), **meta)


def game_to_dict(game: GameSpec) -> dict:
    doc: dict[str, Any] = {"version": VERSION, "kind": game.kind, "n": game.n}
    if game.name:
        doc["name"] = game.name
    if game.source:
        doc["source"] = game.source
    if game.kind == "explicit":
        doc["preferences"] = {
            str(i): [[sorted(c) for c in sorted(tier, key=lambda c: (len(c), sorted(c)))] for tier in tiers]
            for i, tiers in game.payload.rankings().items()
        }
    elif game.kind == "ashg":
        doc["values"] = [list(r) for r in game.payload.values]
    elif game.kind in ("friends", "enemies"):
        doc["adjacency"] = {str(i): list(nbrs) for i, nbrs in enumerate(game.adjacency, 1)}
    elif game.kind == "bhedonic":
        doc["rankings"] = {str(i): list(o) for i, o in enumerate(game.payload.orders, 1)}
    return doc


def load_game(path: str | Path) -> GameSpec:
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GameFileError(f"document: invalid JSON ({exc})") from None
    return game_from_dict(doc)


def dump_game(game: GameSpec) -> str:
    return json.dumps(game_to_dict(game), indent=2) + "\n"


def bundled_text(name: str) -> str:
    """Text of a bundled game file (``example1``, ``example2``, ``prop2``, ``prop3``)."""
    files = resources.files("hedonic") / "data"
    target = files / f"{name}.json"
    if not target.is_file():
        known = sorted(p.name.removesuffix(".json") for p in files.iterdir() if p.name.endswith(".json"))
        raise GameFileError(f"unknown bundled game {name!r}; choose from {', '.join(known)}")
    return target.read_text(encoding="utf-8")


def bundled_game(name: str) -> GameSpec:
    return game_from_dict(json.loads(bundled_text(name)))
