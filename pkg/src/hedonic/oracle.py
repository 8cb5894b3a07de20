"""Exhaustive ground truth over all partitions of a small player set."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .core import BRUTE_FORCE_CAP, CapacityError, Partition, PreferenceProfile, partition_space
from .gameclasses import GameSpec, random_game
from .stability import CHECKERS, GROUP_CONCEPTS, Concept, HierarchyViolation, check_hierarchy

# single-partition checks are cheap; group checks scan every partition per partition
SCAN_CAP = 8
GROUP_SCAN_CAP = 7


def _cap_for(concept: Concept, max_n: int | None) -> int:
    if max_n is not None:
        return max_n
    return GROUP_SCAN_CAP if concept in GROUP_CONCEPTS else SCAN_CAP


def cost_estimate(n: int) -> str:
    space = partition_space(n, cap=max(n, BRUTE_FORCE_CAP))
    b = len(space)
    return f"{b} partitions; group concepts need about {b * b:,} partition pairs"


def _verdict(profile: PreferenceProfile, pi: Partition, concept: Concept, cap: int) -> bool:
    fn = CHECKERS[concept]
    if concept in GROUP_CONCEPTS:
        if concept is Concept.PO:
            return fn(profile, pi, cap=cap).stable
        return fn(profile, pi, cap=cap, witness=False).stable
    return fn(profile, pi).stable


def _space(profile: PreferenceProfile, concept: Concept, max_n: int | None):
    cap = _cap_for(concept, max_n)
    if profile.n > cap:
        raise CapacityError(
            f"{concept.value} scan: n={profile.n} exceeds cap {cap} "
            f"({cost_estimate(profile.n) if profile.n <= 10 else 'too many partitions'}); "
            "raise max_n to override"
        )
    return partition_space(profile.n, cap=max(cap, profile.n)), max(cap, profile.n)


def all_stable(profile: PreferenceProfile, concept: Concept | str, max_n: int | None = None) -> list[Partition]:
    """Every partition passing ``concept``, in enumeration order."""
    concept = Concept.parse(concept) if isinstance(concept, str) else concept
    space, cap = _space(profile, concept, max_n)
    return [pi for pi in space.partitions if _verdict(profile, pi, concept, cap)]


def exists_stable(profile: PreferenceProfile, concept: Concept | str, max_n: int | None = None) -> bool:
    """Early-exit existence test; large blocks are tried first."""
    concept = Concept.parse(concept) if isinstance(concept, str) else concept
    space, cap = _space(profile, concept, max_n)
    order = sorted(range(len(space)), key=lambda k: tuple(-s for s in space.size_vectors[k]))
    return any(_verdict(profile, space.partitions[k], concept, cap) for k in order)


@dataclass
class OracleReport:
    game_id: str
    n: int
    stable: dict[Concept, list[Partition]] = field(default_factory=dict)
    seconds: dict[Concept, float] = field(default_factory=dict)
    hierarchy_violations: list[HierarchyViolation] | None = None

    def count(self, concept: Concept | str) -> int:
        concept = Concept.parse(concept) if isinstance(concept, str) else concept
        return len(self.stable[concept])

    def table(self) -> str:
        lines = [f"game {self.game_id} (n={self.n})", f"{'concept':<8} {'count':>6} {'seconds':>8}  partitions"]
        for c, parts in self.stable.items():
            shown = " ".join(str(p) for p in parts[:6]) + (" ..." if len(parts) > 6 else "")
            lines.append(f"{c.value:<8} {len(parts):>6} {self.seconds[c]:>8.3f}  {shown}")
        if self.hierarchy_violations is not None:
            lines.append(f"hierarchy violations: {len(self.hierarchy_violations)}")
            lines.extend(f"  {v}" for v in self.hierarchy_violations)
        return "\n".join(lines)

    def records(self) -> list[dict]:
        return [
            {
                "game": self.game_id,
                "concept": c.value,
                "count": len(parts),
                "partitions": [str(p) for p in parts],
                "seconds": round(self.seconds[c], 6),
            }
            for c, parts in self.stable.items()
        ]

    def to_dict(self) -> dict:
        return {
            "game": self.game_id,
            "n": self.n,
            "concepts": self.records(),
            "hierarchy_violations": None
            if self.hierarchy_violations is None
            else [str(v) for v in self.hierarchy_violations],
        }


def survey(profile: PreferenceProfile, game_id: str = "game", concepts: Iterable[Concept] = tuple(Concept),
           hierarchy: bool = True, max_n: int | None = None) -> OracleReport:
    report = OracleReport(game_id, profile.n)
    for c in concepts:
        t0 = time.perf_counter()
        report.stable[c] = all_stable(profile, c, max_n)
        report.seconds[c] = time.perf_counter() - t0
    if hierarchy:
        report.hierarchy_violations = check_hierarchy(profile, cap=max(profile.n, BRUTE_FORCE_CAP)
                                                      if max_n else BRUTE_FORCE_CAP)
    return report


@dataclass(frozen=True)
class Family:
    """Random games of one kind; seed ``s`` draws its size from ``sizes``."""

    kind: str
    sizes: Sequence[int]
    density: float = 0.5

    def game(self, seed: int) -> GameSpec:
        n = self.sizes[seed % len(self.sizes)]
        return random_game(self.kind, n, seed, self.density)


def stable_set_empty(concept: Concept | str, max_n: int | None = None) -> Callable[[GameSpec], bool]:
    concept = Concept.parse(concept) if isinstance(concept, str) else concept

    def predicate(game: GameSpec) -> bool:
        return not exists_stable(game.profile, concept, max_n)

    predicate.__name__ = f"{concept.value} empty"
    return predicate


@dataclass(frozen=True)
class Counterexample:
    seed: int
    game: GameSpec


def search_counterexample(family: Family, predicate: Callable[[GameSpec], bool],
                          budget: int = 500) -> Counterexample | None:
    """First game of ``family`` (seeds ``1..budget``) satisfying ``predicate``."""
    for seed in range(1, budget + 1):
        game = family.game(seed)
        if predicate(game):
            return Counterexample(seed, game)
    return None
