"""Choice sets, avoid sets, and the top/bottom responsiveness restrictions.

Every checker scans players ascending, contexts ascending by bitmask, and
reports the first violation it meets, so witnesses are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .core import (
    DomainError,
    PreconditionError,
    PreferenceProfile,
    check_cap,
    format_coalition,
    from_mask,
    popcount,
    submasks_containing,
    to_mask,
)

RESTRICTION_CAP = 12


@dataclass(frozen=True)
class ChoiceSetResult:
    player: int
    context: frozenset[int]
    maximizers: frozenset[frozenset[int]]


@dataclass(frozen=True)
class AvoidSetResult:
    player: int
    context: frozenset[int]
    minimizers: frozenset[frozenset[int]]


@dataclass(frozen=True)
class Violation:
    """Where a restriction fails.

    ``condition`` names the violated clause: ``"1"``, ``"2"``, ``"3"`` for the
    numbered conditions, ``"unique-avoid"`` for the strong part of bottom
    responsiveness and ``"mutuality"``.
    """

    condition: str
    players: tuple[int, ...]
    coalitions: tuple[frozenset[int], ...]

    def __str__(self) -> str:
        ps = ",".join(map(str, self.players))
        cs = " ".join("{" + format_coalition(c) + "}" for c in self.coalitions)
        return f"condition {self.condition}: player(s) {ps}; {cs}"


@dataclass(frozen=True)
class RestrictionVerdict:
    name: str
    holds: bool
    witness: Violation | None = None

    def __bool__(self) -> bool:
        return self.holds

    def __str__(self) -> str:
        if self.holds:
            return f"{self.name}: holds"
        return f"{self.name}: fails ({self.witness})"


class _Extremes:
    """Best/worst subsets of every context, for one player."""

    def __init__(self, profile: PreferenceProfile, i: int):
        n = profile.n
        bit = 1 << (i - 1)
        row = profile.tiers[i - 1]
        self.contexts = np.array([m for m in range(1, 1 << n) if m & bit], dtype=np.int64)
        self.best: dict[int, tuple[int, ...]] = {}
        self.worst: dict[int, tuple[int, ...]] = {}
        for x in self.contexts.tolist():
            subs = np.fromiter(submasks_containing(x, bit), dtype=np.int64)
            t = row[subs]
            self.best[x] = tuple(sorted(subs[t == t.min()].tolist()))
            self.worst[x] = tuple(sorted(subs[t == t.max()].tolist()))
        self.row = row


def _extremes(profile: PreferenceProfile, i: int) -> _Extremes:
    key = ("extremes", i)
    ex = profile._cache.get(key)
    if ex is None:
        ex = profile._cache[key] = _Extremes(profile, i)
    return ex


def _context_mask(profile: PreferenceProfile, i: int, S: Iterable[int]) -> int:
    s = to_mask(S)
    if not s >> (i - 1) & 1:
        raise DomainError(f"player {i} is not in {{{format_coalition(from_mask(s))}}}")
    if s >> profile.n:
        raise DomainError("coalition exceeds the player set")
    return s


def choice_sets(profile: PreferenceProfile, i: int, S: Iterable[int]) -> ChoiceSetResult:
    """The most preferred subsets of ``S`` that contain ``i``."""
    s = _context_mask(profile, i, S)
    best = _extremes(profile, i).best[s]
    return ChoiceSetResult(i, from_mask(s), frozenset(from_mask(m) for m in best))


def avoid_sets(profile: PreferenceProfile, i: int, S: Iterable[int]) -> AvoidSetResult:
    """The least preferred subsets of ``S`` that contain ``i``."""
    s = _context_mask(profile, i, S)
    worst = _extremes(profile, i).worst[s]
    return AvoidSetResult(i, from_mask(s), frozenset(from_mask(m) for m in worst))


def _first_pair(bad: np.ndarray, contexts: np.ndarray) -> tuple[int, int] | None:
    hits = np.argwhere(bad)
    if len(hits) == 0:
        return None
    a, b = hits[0]
    return int(contexts[a]), int(contexts[b])


def _fail(name: str, cond: str, players, masks) -> RestrictionVerdict:
    return RestrictionVerdict(
        name, False, Violation(cond, tuple(players), tuple(from_mask(m) for m in masks))
    )


def is_top_responsive(profile: PreferenceProfile) -> RestrictionVerdict:
    """Unique choice sets, ranking by choice set, and smaller-is-better ties."""
    name = "top responsiveness"
    check_cap(profile.n, RESTRICTION_CAP, name)
    for i in range(1, profile.n + 1):
        ex = _extremes(profile, i)
        xs = ex.contexts
        for x in xs.tolist():
            if len(ex.best[x]) != 1:
                return _fail(name, "1", [i], [x])
        ch = np.array([ex.best[x][0] for x in xs.tolist()], dtype=np.int64)
        t = ex.row[xs]
        ct = ex.row[ch]
        strict_better = t[:, None] < t[None, :]
        # condition 2: ch(X) > ch(Y) forces X > Y
        hit = _first_pair((ct[:, None] < ct[None, :]) & ~strict_better, xs)
        if hit:
            return _fail(name, "2", [i], hit)
        # condition 3: same choice set and X a proper subset of Y forces X > Y
        proper_sub = ((xs[:, None] & ~xs[None, :]) == 0) & (xs[:, None] != xs[None, :])
        hit = _first_pair((ch[:, None] == ch[None, :]) & proper_sub & ~strict_better, xs)
        if hit:
            return _fail(name, "3", [i], hit)
    return RestrictionVerdict(name, True)


def choice_set_mask(profile: PreferenceProfile, i: int, x: int) -> int:
    """``ch(i, X)`` as a bitmask; the choice set must be unique."""
    best = _extremes(profile, i).best[x]
    if len(best) != 1:
        raise PreconditionError(
            f"player {i} has {len(best)} choice sets in {{{format_coalition(from_mask(x))}}}"
        )
    return best[0]


def is_mutual_top(profile: PreferenceProfile) -> RestrictionVerdict:
    """``i`` in ch(j, X) exactly when ``j`` in ch(i, X)."""
    name = "top mutuality"
    tr = is_top_responsive(profile)
    if not tr:
        raise PreconditionError("mutuality needs a top responsive profile", tr)
    return _mutuality(profile, name, lambda i, x: _extremes(profile, i).best[x][0])


def _mutuality(profile: PreferenceProfile, name: str, pick) -> RestrictionVerdict:
    n = profile.n
    for x in range(1, 1 << n):
        players = [i for i in range(1, n + 1) if x >> (i - 1) & 1]
        sets = {i: pick(i, x) for i in players}
        for i in players:
            for j in players:
                if j <= i:
                    continue
                j_in_i = bool(sets[i] >> (j - 1) & 1)
                i_in_j = bool(sets[j] >> (i - 1) & 1)
                if j_in_i != i_in_j:
                    return _fail(name, "mutuality", [i, j], [x])
    return RestrictionVerdict(name, True)


def is_bottom_responsive(profile: PreferenceProfile) -> RestrictionVerdict:
    """Ranking by avoid sets, and larger-is-better when avoid sets overlap."""
    name = "bottom responsiveness"
    check_cap(profile.n, RESTRICTION_CAP, name)
    for i in range(1, profile.n + 1):
        ex = _extremes(profile, i)
        xs = ex.contexts
        t = ex.row[xs]
        # every representative of Av(X) must beat every representative of Av(Y)
        worst_of_x = np.array([max(ex.row[m] for m in ex.worst[x]) for x in xs.tolist()])
        best_of_y = np.array([min(ex.row[m] for m in ex.worst[x]) for x in xs.tolist()])
        reps_better = worst_of_x[:, None] < best_of_y[None, :]
        hit = _first_pair(reps_better & ~(t[:, None] < t[None, :]), xs)
        if hit:
            return _fail(name, "1", [i], hit)
        at = best_of_y
        sizes = np.array([popcount(x) for x in xs.tolist()])
        larger = sizes[:, None] >= sizes[None, :]
        weakly_better = t[:, None] <= t[None, :]
        for a, x in enumerate(xs.tolist()):
            overlap = np.zeros(len(xs), dtype=bool)
            for s in ex.worst[x]:
                # s is an avoid set of Y too iff s fits inside Y at Y's worst tier
                overlap |= ((xs & s) == s) & (at == at[a])
            bad = overlap & larger[a] & ~weakly_better[a]
            if bad.any():
                return _fail(name, "2", [i], [x, int(xs[np.argmax(bad)])])
    return RestrictionVerdict(name, True)


def is_strong_bottom_responsive(profile: PreferenceProfile) -> RestrictionVerdict:
    name = "strong bottom responsiveness"
    br = is_bottom_responsive(profile)
    if not br:
        return RestrictionVerdict(name, False, br.witness)
    for i in range(1, profile.n + 1):
        ex = _extremes(profile, i)
        for x in ex.contexts.tolist():
            if len(ex.worst[x]) != 1:
                return _fail(name, "unique-avoid", [i], [x])
    return RestrictionVerdict(name, True)


def avoid_set_masks(profile: PreferenceProfile, i: int, x: int) -> tuple[int, ...]:
    """All avoid sets of ``i`` in context ``x``, as ascending bitmasks."""
    return _extremes(profile, i).worst[x]


def avoid_set_mask(profile: PreferenceProfile, i: int, x: int) -> int:
    """``av(i, X)`` as a bitmask; the avoid set must be unique."""
    worst = _extremes(profile, i).worst[x]
    if len(worst) != 1:
        raise PreconditionError(
            f"player {i} has {len(worst)} avoid sets in {{{format_coalition(from_mask(x))}}}"
        )
    return worst[0]


def is_mutual_bottom(profile: PreferenceProfile) -> RestrictionVerdict:
    """``i`` in av(j, X) exactly when ``j`` in av(i, X)."""
    name = "bottom mutuality"
    sbr = is_strong_bottom_responsive(profile)
    if not sbr:
        raise PreconditionError("mutuality needs a strongly bottom responsive profile", sbr)
    return _mutuality(profile, name, lambda i, x: _extremes(profile, i).worst[x][0])


def check_all(profile: PreferenceProfile) -> dict[str, RestrictionVerdict | None]:
    """Every restriction by name; a mutuality entry is ``None`` when its base fails."""
    tr = is_top_responsive(profile)
    sbr = is_strong_bottom_responsive(profile)
    return {
        "TR": tr,
        "TR-mutual": is_mutual_top(profile) if tr else None,
        "BR": is_bottom_responsive(profile),
        "strong-BR": sbr,
        "BR-mutual": is_mutual_bottom(profile) if sbr else None,
    }
