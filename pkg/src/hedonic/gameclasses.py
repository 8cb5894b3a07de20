"""Compact game representations and their expansion to explicit profiles."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .core import COALITION_CAP, DomainError, PreferenceProfile, check_cap

KINDS = (
    "explicit",
    "ashg",
    "symmetric-ashg",
    "friends",
    "symmetric-friends",
    "enemies",
    "symmetric-enemies",
    "bhedonic-strict",
)


@dataclass(frozen=True)
class AshgMatrix:
    """Integer values ``v_i(j)``; ``values[i-1][j-1]``, diagonal ignored."""

    values: tuple[tuple[int, ...], ...]

    def __init__(self, values: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(v) for v in row) for row in values)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DomainError("value matrix must be square")
        rows = tuple(tuple(0 if i == j else v for j, v in enumerate(r)) for i, r in enumerate(rows))
        object.__setattr__(self, "values", rows)

    @property
    def n(self) -> int:
        return len(self.values)

    def value(self, i: int, j: int) -> int:
        return self.values[i - 1][j - 1]

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=np.int64).reshape(self.n, self.n)


def utilities(m: AshgMatrix) -> np.ndarray:
    """``out[i-1, mask]``: player i's summed value for the coalition ``mask``."""
    n = m.n
    masks = np.arange(1 << n)
    member = ((masks[:, None] >> np.arange(n)) & 1).astype(np.int64)  # (2^n, n)
    return m.as_array() @ member.T


def ashg_to_profile(m: AshgMatrix) -> PreferenceProfile:
    """Rank coalitions by descending utility; equal sums share a tier."""
    n = m.n
    check_cap(n, COALITION_CAP, "ashg_to_profile")
    util = utilities(m)
    masks = np.arange(1 << n)
    table = np.full((n, 1 << n), -1, dtype=np.int64)
    for i in range(n):
        has = (masks >> i) & 1 == 1
        table[i, has] = util[i, has].max() - util[i, has]
    return PreferenceProfile(n, table)


def is_symmetric(m: AshgMatrix) -> bool:
    a = m.as_array()
    return bool(np.array_equal(a, a.T))


def is_strict_ashg(m: AshgMatrix) -> bool:
    a = m.as_array()
    off = ~np.eye(m.n, dtype=bool)
    return bool(np.all(a[off] != 0))


def _adjacency(n: int, adjacency: Mapping[int, Sequence[int]]) -> list[set[int]]:
    adj = [set() for _ in range(n)]
    for i, nbrs in adjacency.items():
        if not 1 <= i <= n:
            raise DomainError(f"player {i} not in 1..{n}")
        for j in nbrs:
            if not 1 <= j <= n or j == i:
                raise DomainError(f"player {i}: invalid neighbour {j}")
            adj[i - 1].add(j)
    return adj


def friends_game(n: int, adjacency: Mapping[int, Sequence[int]]) -> AshgMatrix:
    """Appreciation of friends: ``+n`` for a friend, ``-1`` otherwise."""
    adj = _adjacency(n, adjacency)
    return AshgMatrix([[n if j in adj[i - 1] else -1 for j in range(1, n + 1)] for i in range(1, n + 1)])


def enemies_game(n: int, adjacency: Mapping[int, Sequence[int]]) -> AshgMatrix:
    """Aversion to enemies: ``+1`` for a friend, ``-n`` otherwise."""
    adj = _adjacency(n, adjacency)
    return AshgMatrix([[1 if j in adj[i - 1] else -n for j in range(1, n + 1)] for i in range(1, n + 1)])


@dataclass(frozen=True)
class BRanking:
    """Each player's strict order over all players (itself included), best first."""

    orders: tuple[tuple[int, ...], ...]

    def __init__(self, orders: Sequence[Sequence[int]] | Mapping[int, Sequence[int]]):
        if isinstance(orders, Mapping):
            orders = [orders[i] for i in range(1, len(orders) + 1)]
        rows = tuple(tuple(int(j) for j in row) for row in orders)
        n = len(rows)
        for i, row in enumerate(rows, 1):
            if sorted(row) != list(range(1, n + 1)):
                raise DomainError(
                    f"player {i}: ranking must order every player 1..{n} exactly once (strict rankings only)"
                )
        object.__setattr__(self, "orders", rows)

    @property
    def n(self) -> int:
        return len(self.orders)


def bhedonic_to_profile(r: BRanking) -> PreferenceProfile:
    """Coalitions ranked by their best other member, then by smaller size.

    A singleton's best member is the player itself.  Coalitions with the same
    best member and the same size are indifferent.
    """
    n = r.n
    check_cap(n, COALITION_CAP, "bhedonic_to_profile")
    table = np.full((n, 1 << n), -1, dtype=np.int64)
    for i in range(1, n + 1):
        pos = {j: k for k, j in enumerate(r.orders[i - 1])}
        bit = 1 << (i - 1)
        for m in range(1, 1 << n):
            if not m & bit:
                continue
            others = [j for j in range(1, n + 1) if m >> (j - 1) & 1 and j != i]
            best = min((pos[j] for j in others), default=pos[i])
            size = len(others) + 1
            table[i - 1, m] = best * (n + 1) + size
    return PreferenceProfile(n, table)


@dataclass(frozen=True)
class GameSpec:
    """A game in one of the supported representations.

    ``kind`` is ``explicit``, ``ashg``, ``friends``, ``enemies`` or
    ``bhedonic``; ``payload`` is the matching object (a
    :class:`PreferenceProfile`, :class:`AshgMatrix`, or :class:`BRanking`).
    Friends and enemies games also carry their ``adjacency``.
    """

    kind: str
    payload: object
    adjacency: tuple[tuple[int, ...], ...] | None = None
    name: str | None = None
    source: str | None = None
    _profile: list = field(default_factory=list, compare=False, repr=False)

    @property
    def n(self) -> int:
        return self.payload.n

    @property
    def profile(self) -> PreferenceProfile:
        if not self._profile:
            if self.kind == "explicit":
                self._profile.append(self.payload)
            elif self.kind in ("ashg", "friends", "enemies"):
                self._profile.append(ashg_to_profile(self.payload))
            elif self.kind == "bhedonic":
                self._profile.append(bhedonic_to_profile(self.payload))
            else:
                raise DomainError(f"unknown game kind {self.kind!r}")
        return self._profile[0]


def _graph(rng: np.random.Generator, n: int, symmetric: bool, p: float) -> dict[int, list[int]]:
    hits = rng.random((n, n)) < p
    if symmetric:
        hits = np.triu(hits, 1)
        hits = hits | hits.T
    np.fill_diagonal(hits, False)
    return {i + 1: [int(j) + 1 for j in np.flatnonzero(hits[i])] for i in range(n)}


def random_game(kind: str, n: int, seed: int, density: float = 0.5) -> GameSpec:
    """A game drawn deterministically from ``(kind, n, seed)``.

    ``density`` is the edge probability for friends/enemies graphs.
    ``bhedonic-strict`` rankings put each player last in its own order, so
    every companion is acceptable; with the player ranked higher, top
    responsiveness can fail.
    """
    if kind not in KINDS:
        raise DomainError(f"unknown random game kind {kind!r}")
    check_cap(n, COALITION_CAP, "random_game")
    rng = np.random.default_rng([seed, n, KINDS.index(kind)])
    name = f"{kind}-n{n}-s{seed}"
    if kind == "explicit":
        levels = max(2, 1 << (n - 1))
        table = rng.integers(0, levels, size=(n, 1 << n))
        return GameSpec("explicit", PreferenceProfile(n, _fill_owned(table, n)), name=name)
    if kind in ("ashg", "symmetric-ashg"):
        v = rng.integers(-n, n + 1, size=(n, n))
        if kind == "symmetric-ashg":
            v = np.triu(v, 1)
            v = v + v.T
        return GameSpec("ashg", AshgMatrix(v.tolist()), name=name)
    if kind == "bhedonic-strict":
        # every other player acceptable: each ranks itself last
        orders = []
        for i in range(1, n + 1):
            others = [j for j in range(1, n + 1) if j != i]
            orders.append([others[k] for k in rng.permutation(n - 1)] + [i])
        return GameSpec("bhedonic", BRanking(orders), name=name)
    symmetric = kind.startswith("symmetric-")
    adjacency = _graph(rng, n, symmetric, density)
    build = friends_game if kind.endswith("friends") else enemies_game
    adj = tuple(tuple(adjacency[i]) for i in range(1, n + 1))
    return GameSpec(kind.removeprefix("symmetric-"), build(n, adjacency), adjacency=adj, name=name)


def _fill_owned(table: np.ndarray, n: int) -> np.ndarray:
    masks = np.arange(1 << n)
    out = np.array(table, dtype=np.int64)
    for i in range(n):
        out[i, (masks >> i) & 1 == 0] = -1
    return out
