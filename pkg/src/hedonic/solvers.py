"""Constructive algorithms for stable partitions.

* :func:`top_covering` repeatedly peels off the smallest connected component
  of the choice-set neighbour graph.
* :func:`deviation_dynamics` starts from singletons and applies improving
  deviations; under bottom responsiveness each step increases the sorted
  block-size vector, which bounds the number of steps.
* :func:`find_gdot_maximal_IR` picks the partition with the largest sorted
  size vector among those where every player is its own unique avoid set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .core import (
    BRUTE_FORCE_CAP,
    Order,
    Partition,
    PreconditionError,
    PreferenceProfile,
    compare_size_vectors,
    format_coalition,
    from_mask,
    integer_partition_count,
    partition_space,
    size_vector,
    to_mask,
)
from .restrictions import (
    avoid_set_masks,
    choice_set_mask,
    is_bottom_responsive,
    is_mutual_bottom,
    is_strong_bottom_responsive,
    is_top_responsive,
)
from .stability import (
    Concept,
    StabilityVerdict,
    is_individually_stable,
    is_strong_individually_stable,
    mover_order_by_size,
)


# --- top covering ---------------------------------------------------------


@dataclass(frozen=True)
class NeighborRelation:
    context: frozenset[int]
    edges: frozenset[tuple[int, int]]

    def is_symmetric(self) -> bool:
        return all((j, i) in self.edges for i, j in self.edges)


def neighbor_relation(profile: PreferenceProfile, X) -> NeighborRelation:
    """``(i, j)`` for every ``j`` in ``ch(i, X)``, ``j != i``."""
    x = to_mask(X)
    edges = set()
    for i in from_mask(x):
        for j in from_mask(choice_set_mask(profile, i, x)):
            if j != i:
                edges.add((i, j))
    return NeighborRelation(from_mask(x), frozenset(edges))


def _component(profile: PreferenceProfile, i: int, x: int) -> int:
    seen = 1 << (i - 1)
    stack = [i]
    while stack:
        k = stack.pop()
        new = choice_set_mask(profile, k, x) & ~seen
        seen |= new
        stack.extend(from_mask(new))
    return seen


def connected_component(profile: PreferenceProfile, i: int, X) -> frozenset[int]:
    """Players reachable from ``i`` by chains of choice-set neighbours inside ``X``."""
    x = to_mask(X)
    if not x >> (i - 1) & 1:
        raise PreconditionError(f"player {i} is not in {{{format_coalition(from_mask(x))}}}")
    return from_mask(_component(profile, i, x))


@dataclass(frozen=True)
class TcaRound:
    k: int
    remaining: frozenset[int]
    selected: int
    component: frozenset[int]

    def __str__(self) -> str:
        return (f"round {self.k}: R={format_coalition(self.remaining)} "
                f"select {self.selected} S={format_coalition(self.component)}")


@dataclass(frozen=True)
class TcaTrace:
    rounds: tuple[TcaRound, ...]

    def lines(self) -> list[str]:
        return [str(r) for r in self.rounds]


def top_covering(profile: PreferenceProfile, check: bool = True) -> tuple[Partition, TcaTrace]:
    """Top Covering Algorithm.  Ties in component size go to the lowest player."""
    if check:
        tr = is_top_responsive(profile)
        if not tr:
            raise PreconditionError(f"top covering needs top responsiveness: {tr}", tr)
    remaining = (1 << profile.n) - 1
    blocks, rounds = [], []
    k = 1
    while remaining:
        comps = {i: _component(profile, i, remaining) for i in from_mask(remaining)}
        selected = min(comps, key=lambda i: (bin(comps[i]).count("1"), i))
        s = comps[selected]
        rounds.append(TcaRound(k, from_mask(remaining), selected, from_mask(s)))
        blocks.append(s)
        remaining &= ~s
        k += 1
    return Partition.from_masks(blocks, profile.n), TcaTrace(tuple(rounds))


def lemma1_check(profile: PreferenceProfile, pi: Partition) -> bool:
    """Whether every player's choice set in the whole player set lies in its block."""
    full = (1 << profile.n) - 1
    blocks = pi.block_masks_by_player()
    return all(choice_set_mask(profile, i, full) & ~blocks[i - 1] == 0 for i in range(1, profile.n + 1))


# --- deviation dynamics ---------------------------------------------------


@dataclass(frozen=True)
class DynamicsStep:
    partition: Partition
    movers: frozenset[int]
    successor: Partition

    def __str__(self) -> str:
        return f"{self.partition} H={format_coalition(self.movers)} → {self.successor}"


@dataclass
class DynamicsTrace:
    mode: str
    steps: list[DynamicsStep] = field(default_factory=list)
    potential_vectors: list[tuple[int, ...]] = field(default_factory=list)

    def lines(self) -> list[str]:
        return [f"step {k}: {s}" for k, s in enumerate(self.steps, 1)]

    def strictly_increasing(self) -> bool:
        v = self.potential_vectors
        return all(compare_size_vectors(b, a) is Order.GREATER for a, b in zip(v, v[1:]))


def deviation_dynamics(profile: PreferenceProfile, mode: Literal["IS", "SIS"] = "IS",
                       check: bool = True, cap: int = BRUTE_FORCE_CAP) -> tuple[Partition, DynamicsTrace]:
    """Improving deviations from the all-singletons partition until none is left.

    IS mode moves one player at a time (players ascending, target blocks in
    canonical order, going alone last).  SIS mode takes strongly individually
    blocking group moves, smallest mover sets first.
    """
    mode = mode.upper()
    if mode not in ("IS", "SIS"):
        raise ValueError(f"mode must be IS or SIS, got {mode!r}")
    if check:
        br = is_bottom_responsive(profile)
        if not br:
            raise PreconditionError(f"deviation dynamics need bottom responsiveness: {br}", br)
    pi = Partition.singletons(profile.n)
    trace = DynamicsTrace(mode, potential_vectors=[size_vector(pi)])
    guard = integer_partition_count(profile.n) + 1
    for _ in range(guard):
        verdict = _next_deviation(profile, pi, mode, cap)
        if verdict.stable:
            return pi, trace
        succ = verdict.witness.successor
        trace.steps.append(DynamicsStep(pi, verdict.witness.movers, succ))
        trace.potential_vectors.append(size_vector(succ))
        pi = succ
    raise RuntimeError(
        f"deviation dynamics exceeded {guard} steps; the bottom responsiveness check must be wrong"
    )


def _next_deviation(profile, pi, mode, cap) -> StabilityVerdict:
    if mode == "IS":
        return is_individually_stable(profile, pi)
    return is_strong_individually_stable(profile, pi, cap=cap, order=mover_order_by_size)


MODE_CONCEPT = {"IS": Concept.IS, "SIS": Concept.SIS}


# --- maximal individually rational partition ------------------------------


def _unique_self_avoid(profile: PreferenceProfile, pi: Partition) -> bool:
    for m in pi.masks:
        for i in from_mask(m):
            if avoid_set_masks(profile, i, m) != (1 << (i - 1),):
                return False
    return True


def find_gdot_maximal_IR(profile: PreferenceProfile, check: bool = True,
                         cap: int = BRUTE_FORCE_CAP) -> Partition:
    """Largest size vector among partitions where each player is its own avoid set.

    Ties go to the first partition in enumeration order.
    """
    if check:
        sbr = is_strong_bottom_responsive(profile)
        if not sbr:
            raise PreconditionError(f"needs strong bottom responsiveness: {sbr}", sbr)
        mb = is_mutual_bottom(profile)
        if not mb:
            raise PreconditionError(f"needs bottom mutuality: {mb}", mb)
    space = partition_space(profile.n, cap)
    best = None
    for pi, vec in zip(space.partitions, space.size_vectors):
        if best is not None and compare_size_vectors(vec, best[1]) is not Order.GREATER:
            continue
        if _unique_self_avoid(profile, pi):
            best = (pi, vec)
    return best[0]

