"""The ten stability concepts, each decided with a replayable witness.

Group deviations (SNS, SSNS, SIS) and Pareto dominance are decided by
scanning every partition of the player set against the one under test,
using the tables in :class:`~hedonic.core.PartitionSpace`.  For a fixed
successor partition the admissible mover sets are upward closed under
reachability, so existence reduces to testing the largest candidate set;
the reported witness is then the smallest mover set by bitmask, with ties
between successors broken by enumeration order.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable

import numpy as np

from .core import (
    BRUTE_FORCE_CAP,
    DomainError,
    Partition,
    PreferenceProfile,
    format_coalition,
    from_mask,
    partition_space,
    partition_tiers,
    popcount,
    to_mask,
)


class Concept(str, Enum):
    IR = "IR"
    PERFECT = "PERFECT"
    NS = "NS"
    IS = "IS"
    C = "C"
    SC = "SC"
    PO = "PO"
    SNS = "SNS"
    SSNS = "SSNS"
    SIS = "SIS"

    @classmethod
    def parse(cls, text: str) -> Concept:
        try:
            return cls(text.strip().upper())
        except ValueError:
            names = ", ".join(c.value.lower() for c in cls)
            raise DomainError(f"unknown stability concept {text!r} (expected one of {names})") from None


GROUP_CONCEPTS = frozenset({Concept.SNS, Concept.SSNS, Concept.SIS, Concept.PO})

# antecedent => consequent, as drawn in the inclusion lattice
HIERARCHY_EDGES: tuple[tuple[Concept, Concept], ...] = (
    (Concept.PERFECT, Concept.SSNS),
    (Concept.SSNS, Concept.SNS),
    (Concept.SSNS, Concept.SC),
    (Concept.SNS, Concept.NS),
    (Concept.SNS, Concept.SIS),
    (Concept.SC, Concept.SIS),
    (Concept.SC, Concept.PO),
    (Concept.SIS, Concept.IS),
    (Concept.SIS, Concept.C),
    (Concept.NS, Concept.IS),
    (Concept.IS, Concept.IR),
    (Concept.C, Concept.IR),
)


class WitnessKind(str, Enum):
    SINGLE_MOVE = "single-move"
    GROUP_MOVE = "group-move"
    BLOCKING_COALITION = "blocking-coalition"
    PARETO_DOMINATOR = "pareto-dominator"
    BETTER_COALITION = "better-coalition"


@dataclass(frozen=True)
class DeviationWitness:
    """Movers ``H`` and the partition they produce.

    For blocking coalitions ``coalition`` is the blocking set and
    ``successor`` is the partition in which it splits off.  For an imperfect
    partition ``coalition`` is a coalition the single mover strictly prefers
    and there is no successor.
    """

    kind: WitnessKind
    movers: frozenset[int]
    successor: Partition | None = None
    coalition: frozenset[int] | None = None

    def __str__(self) -> str:
        h = "H=" + format_coalition(self.movers)
        if self.kind is WitnessKind.BETTER_COALITION:
            return f"{h} prefers {{{format_coalition(self.coalition)}}}"
        if self.kind is WitnessKind.BLOCKING_COALITION:
            return f"{h} blocks → {self.successor}"
        if self.kind is WitnessKind.PARETO_DOMINATOR:
            return f"dominated by {self.successor}"
        return f"{h} → {self.successor}"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "movers": sorted(self.movers),
            "successor": None if self.successor is None else str(self.successor),
            "coalition": None if self.coalition is None else sorted(self.coalition),
        }


@dataclass(frozen=True)
class StabilityVerdict:
    concept: Concept
    stable: bool
    witness: DeviationWitness | None = None

    def __bool__(self) -> bool:
        return self.stable

    def __str__(self) -> str:
        head = f"{self.concept.value} {str(self.stable).lower()}"
        return head if self.witness is None else f"{head} {self.witness}"

    def to_dict(self) -> dict:
        return {
            "concept": self.concept.value,
            "stable": self.stable,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }


def _check_partition(profile: PreferenceProfile, pi: Partition) -> None:
    if pi.n != profile.n:
        raise DomainError(f"partition of 1..{pi.n} used with a {profile.n}-player game")


def _tier(profile: PreferenceProfile, i: int, mask: int) -> int:
    return int(profile.tiers[i - 1, mask])


def _move(pi: Partition, i: int, target: int) -> Partition:
    """``pi`` after player ``i`` leaves its block and joins ``target`` (0 = alone)."""
    bit = 1 << (i - 1)
    masks = []
    for m in pi.masks:
        if m == target:
            continue
        if m & bit:
            if m != bit:
                masks.append(m & ~bit)
        else:
            masks.append(m)
    masks.append(target | bit)
    return Partition.from_masks(masks, pi.n)


def _split_off(pi: Partition, s: int) -> Partition:
    masks = [m & ~s for m in pi.masks if m & ~s]
    return Partition.from_masks(masks + [s], pi.n)


def reachable(pi: Partition, successor: Partition, movers: Iterable[int]) -> bool:
    """Whether only the players in ``movers`` changed who they are grouped with."""
    h = set(movers)
    if not h:
        raise DomainError("the mover set must be non-empty")
    if pi.n != successor.n:
        raise DomainError("partitions of different player sets")
    if pi == successor:
        raise DomainError("the successor must differ from the partition")
    before = pi.block_masks_by_player()
    after = successor.block_masks_by_player()
    rest = [i for i in range(1, pi.n + 1) if i not in h]
    for a in rest:
        for b in rest:
            if a < b and (before[a - 1] == before[b - 1]) != (after[a - 1] == after[b - 1]):
                return False
    return True


# --- single-player and coalition concepts ---------------------------------


def is_individually_rational(profile: PreferenceProfile, pi: Partition) -> StabilityVerdict:
    _check_partition(profile, pi)
    blocks = pi.block_masks_by_player()
    for i in range(1, pi.n + 1):
        if _tier(profile, i, 1 << (i - 1)) < _tier(profile, i, blocks[i - 1]):
            w = DeviationWitness(WitnessKind.SINGLE_MOVE, frozenset({i}), _move(pi, i, 0))
            return StabilityVerdict(Concept.IR, False, w)
    return StabilityVerdict(Concept.IR, True)


def is_perfect(profile: PreferenceProfile, pi: Partition) -> StabilityVerdict:
    _check_partition(profile, pi)
    blocks = pi.block_masks_by_player()
    for i in range(1, pi.n + 1):
        row = profile.tiers[i - 1]
        top = row[row >= 0].min()
        if row[blocks[i - 1]] > top:
            best = int(np.flatnonzero(row == top)[0])
            w = DeviationWitness(WitnessKind.BETTER_COALITION, frozenset({i}), coalition=from_mask(best))
            return StabilityVerdict(Concept.PERFECT, False, w)
    return StabilityVerdict(Concept.PERFECT, True)


def _single_moves(pi: Partition, i: int) -> Iterable[int]:
    bit = 1 << (i - 1)
    for m in pi.masks:
        if not m & bit:
            yield m
    yield 0


def is_nash_stable(profile: PreferenceProfile, pi: Partition) -> StabilityVerdict:
    _check_partition(profile, pi)
    blocks = pi.block_masks_by_player()
    for i in range(1, pi.n + 1):
        bit = 1 << (i - 1)
        for t in _single_moves(pi, i):
            if _tier(profile, i, t | bit) < _tier(profile, i, blocks[i - 1]):
                w = DeviationWitness(WitnessKind.SINGLE_MOVE, frozenset({i}), _move(pi, i, t))
                return StabilityVerdict(Concept.NS, False, w)
    return StabilityVerdict(Concept.NS, True)


def _welcomed(profile: PreferenceProfile, t: int, joined: int) -> bool:
    return all(_tier(profile, j, joined) <= _tier(profile, j, t) for j in from_mask(t))


def is_individually_stable(profile: PreferenceProfile, pi: Partition) -> StabilityVerdict:
    _check_partition(profile, pi)
    blocks = pi.block_masks_by_player()
    for i in range(1, pi.n + 1):
        bit = 1 << (i - 1)
        for t in _single_moves(pi, i):
            if _tier(profile, i, t | bit) < _tier(profile, i, blocks[i - 1]) and _welcomed(profile, t, t | bit):
                w = DeviationWitness(WitnessKind.SINGLE_MOVE, frozenset({i}), _move(pi, i, t))
                return StabilityVerdict(Concept.IS, False, w)
    return StabilityVerdict(Concept.IS, True)


def _coalition_scan(profile: PreferenceProfile, pi: Partition, weak: bool) -> int | None:
    """First coalition (by bitmask) that blocks, or weakly blocks, ``pi``."""
    n = profile.n
    masks = np.arange(1 << n)
    current = np.array([_tier(profile, i, m) for i, m in enumerate(pi.block_masks_by_player(), 1)])
    member = ((masks[None, :] >> np.arange(n)[:, None]) & 1).astype(bool)
    t = profile.tiers
    strict = t < current[:, None]
    if weak:
        ok = np.all(~member | (t <= current[:, None]), axis=0) & np.any(member & strict, axis=0)
    else:
        ok = np.all(~member | strict, axis=0)
    ok[0] = False
    hits = np.flatnonzero(ok)
    return int(hits[0]) if len(hits) else None


def is_core_stable(profile: PreferenceProfile, pi: Partition) -> StabilityVerdict:
    _check_partition(profile, pi)
    s = _coalition_scan(profile, pi, weak=False)
    if s is None:
        return StabilityVerdict(Concept.C, True)
    w = DeviationWitness(WitnessKind.BLOCKING_COALITION, from_mask(s), _split_off(pi, s), from_mask(s))
    return StabilityVerdict(Concept.C, False, w)


def is_strict_core_stable(profile: PreferenceProfile, pi: Partition) -> StabilityVerdict:
    _check_partition(profile, pi)
    s = _coalition_scan(profile, pi, weak=True)
    if s is None:
        return StabilityVerdict(Concept.SC, True)
    w = DeviationWitness(WitnessKind.BLOCKING_COALITION, from_mask(s), _split_off(pi, s), from_mask(s))
    return StabilityVerdict(Concept.SC, False, w)


# --- partition-scanning concepts ------------------------------------------


class _Scan:
    """Per-successor improvement masks for one partition under test."""

    def __init__(self, profile: PreferenceProfile, pi: Partition, cap: int, witness: bool = True):
        _check_partition(profile, pi)
        self.want_witness = witness
        self.space = space = partition_space(profile.n, cap)
        self.n = profile.n
        self.origin = space.lookup(pi)
        pt = partition_tiers(profile, space)
        current = pt[self.origin]
        weights = 1 << np.arange(self.n, dtype=np.int64)
        strict = pt < current
        weak = pt <= current
        self.strict = strict @ weights
        self.weak = weak @ weights
        # players whose new block is made up entirely of weak improvers
        block_ok = (space.block & ~self.weak[:, None]) == 0
        self.consenting = block_ok @ weights
        self.diff = space.together ^ space.together[self.origin]
        self.others = np.ones(len(space), dtype=bool)
        self.others[self.origin] = False

    def reachable(self, h: int | np.ndarray) -> np.ndarray:
        return (self.diff & self.space.pairs_outside[h]) == 0

    def find(self, admissible: Callable[[int], np.ndarray], candidate: np.ndarray,
             order: Callable[[int], object] = lambda h: h) -> tuple[int, int] | None:
        """Smallest ``(H, successor index)`` under ``order``, if any blocks.

        ``candidate[p]`` is the largest admissible mover set for successor
        ``p``; ``admissible(h)`` flags successors for which ``h`` works.
        """
        live = self.others & (candidate != 0) & self.reachable(candidate)
        if not live.any():
            return None
        if not self.want_witness:
            return 0, int(np.argmax(live))
        pool = int(np.bitwise_or.reduce(candidate[live]))
        subs = [h for h in range(1, pool + 1) if h & pool == h]
        for h in sorted(subs, key=order):
            ok = live & ((h & ~candidate) == 0) & admissible(h) & self.reachable(h)
            if ok.any():
                return h, int(np.argmax(ok))
        raise AssertionError("upward-closed search found a candidate but no mover set")


def _group_verdict(concept, scan: _Scan, hit) -> StabilityVerdict:
    if hit is None:
        return StabilityVerdict(concept, True)
    h, p = hit
    if not scan.want_witness:
        return StabilityVerdict(concept, False)
    w = DeviationWitness(WitnessKind.GROUP_MOVE, from_mask(h), scan.space.partitions[p])
    return StabilityVerdict(concept, False, w)


def is_strong_nash_stable(profile: PreferenceProfile, pi: Partition, cap: int = BRUTE_FORCE_CAP,
                          order=lambda h: h, witness: bool = True) -> StabilityVerdict:
    """No mover set reaches a partition that every mover strictly prefers."""
    scan = _Scan(profile, pi, cap, witness)
    every = np.ones_like(scan.others)
    hit = scan.find(lambda h: every, scan.strict, order)
    return _group_verdict(Concept.SNS, scan, hit)


def is_strict_strong_nash_stable(profile: PreferenceProfile, pi: Partition, cap: int = BRUTE_FORCE_CAP,
                                 order=lambda h: h, witness: bool = True) -> StabilityVerdict:
    """No mover set reaches a partition all movers weakly prefer, one strictly."""
    scan = _Scan(profile, pi, cap, witness)
    candidate = np.where(scan.strict != 0, scan.weak, 0)
    hit = scan.find(lambda h: (h & scan.strict) != 0, candidate, order)
    return _group_verdict(Concept.SSNS, scan, hit)


def is_strong_individually_stable(profile: PreferenceProfile, pi: Partition, cap: int = BRUTE_FORCE_CAP,
                                  order=lambda h: h, witness: bool = True) -> StabilityVerdict:
    """Like strong Nash stability, but every member of each new block that
    receives a mover must weakly consent to the move."""
    scan = _Scan(profile, pi, cap, witness)
    candidate = scan.strict & scan.consenting
    every = np.ones_like(scan.others)
    hit = scan.find(lambda h: every, candidate, order)
    return _group_verdict(Concept.SIS, scan, hit)


def is_pareto_optimal(profile: PreferenceProfile, pi: Partition, cap: int = BRUTE_FORCE_CAP) -> StabilityVerdict:
    scan = _Scan(profile, pi, cap)
    full = (1 << profile.n) - 1
    dominated = scan.others & (scan.weak == full) & (scan.strict != 0)
    if not dominated.any():
        return StabilityVerdict(Concept.PO, True)
    p = int(np.argmax(dominated))
    succ = scan.space.partitions[p]
    before, after = pi.block_masks_by_player(), succ.block_masks_by_player()
    changed = frozenset(i for i in range(1, pi.n + 1) if before[i - 1] != after[i - 1])
    w = DeviationWitness(WitnessKind.PARETO_DOMINATOR, changed, succ)
    return StabilityVerdict(Concept.PO, False, w)


CHECKERS: dict[Concept, Callable[..., StabilityVerdict]] = {
    Concept.IR: is_individually_rational,
    Concept.PERFECT: is_perfect,
    Concept.NS: is_nash_stable,
    Concept.IS: is_individually_stable,
    Concept.C: is_core_stable,
    Concept.SC: is_strict_core_stable,
    Concept.PO: is_pareto_optimal,
    Concept.SNS: is_strong_nash_stable,
    Concept.SSNS: is_strict_strong_nash_stable,
    Concept.SIS: is_strong_individually_stable,
}


def check(profile: PreferenceProfile, pi: Partition, concept: Concept | str,
          cap: int = BRUTE_FORCE_CAP) -> StabilityVerdict:
    concept = Concept.parse(concept) if isinstance(concept, str) else concept
    fn = CHECKERS[concept]
    if concept in GROUP_CONCEPTS:
        return fn(profile, pi, cap=cap)
    return fn(profile, pi)


# --- witness replay -------------------------------------------------------


def confirms_violation(profile: PreferenceProfile, pi: Partition, verdict: StabilityVerdict) -> bool:
    """Re-derive a negative verdict from its witness using only tier lookups.

    Independent of the scanning code: checks the defining condition of the
    concept directly on the witness.
    """
    w = verdict.witness
    if verdict.stable or w is None:
        return False
    c = verdict.concept
    before = pi.block_masks_by_player()
    tier = lambda i, m: _tier(profile, i, m)  # noqa: E731
    if c is Concept.PERFECT:
        (i,) = w.movers
        return tier(i, to_mask(w.coalition)) < tier(i, before[i - 1])
    succ = w.successor
    after = succ.block_masks_by_player()
    better = {i: tier(i, after[i - 1]) < tier(i, before[i - 1]) for i in range(1, pi.n + 1)}
    weakly = {i: tier(i, after[i - 1]) <= tier(i, before[i - 1]) for i in range(1, pi.n + 1)}
    if c is Concept.PO:
        return succ != pi and all(weakly.values()) and any(better.values())
    if c in (Concept.C, Concept.SC):
        s = w.coalition
        if to_mask(s) not in succ.masks:
            return False
        if c is Concept.C:
            return all(better[i] for i in s)
        return all(weakly[i] for i in s) and any(better[i] for i in s)
    if succ == pi or not reachable(pi, succ, w.movers):
        return False
    h = w.movers
    if c is Concept.IR:
        (i,) = h
        return after[i - 1] == 1 << (i - 1) and better[i]
    if c in (Concept.NS, Concept.IS):
        if len(h) != 1:
            return False
        (i,) = h
        target = after[i - 1] & ~(1 << (i - 1))
        if target and target not in before:
            return False
        if c is Concept.IS and not all(weakly[j] for j in from_mask(target)):
            return False
        return better[i]
    if c is Concept.SNS:
        return all(better[i] for i in h)
    if c is Concept.SSNS:
        return all(weakly[i] for i in h) and any(better[i] for i in h)
    if c is Concept.SIS:
        joined = {j for i in h for j in from_mask(after[i - 1])}
        return all(better[i] for i in h) and all(weakly[j] for j in joined)
    return False


# --- lattice validator ----------------------------------------------------


@dataclass(frozen=True)
class HierarchyViolation:
    partition: Partition
    antecedent: Concept
    consequent: Concept

    def __str__(self) -> str:
        return f"{self.partition}: {self.antecedent.value} holds but {self.consequent.value} fails"


def stability_table(profile: PreferenceProfile, pi: Partition, cap: int = BRUTE_FORCE_CAP) -> dict[Concept, bool]:
    return {c: check(profile, pi, c, cap).stable for c in Concept}


def check_hierarchy(profile: PreferenceProfile, cap: int = BRUTE_FORCE_CAP) -> list[HierarchyViolation]:
    """Every partition where an inclusion edge fails; empty unless a checker is wrong."""
    space = partition_space(profile.n, cap)
    out = []
    for pi in space.partitions:
        table = stability_table(profile, pi, cap)
        for a, b in HIERARCHY_EDGES:
            if table[a] and not table[b]:
                out.append(HierarchyViolation(pi, a, b))
    return out


def mover_order_by_size(h: int) -> tuple[int, int]:
    """Smallest mover sets first, then by bitmask."""
    return popcount(h), h
