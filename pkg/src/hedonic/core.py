"""Players, coalitions, weak-order preference profiles and partitions.

Players are 1-based integers.  Internally a coalition is a bitmask where
player ``i`` occupies bit ``i - 1``; the public surface speaks in
``frozenset[int]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

COALITION_CAP = 16
BRUTE_FORCE_CAP = 8

Coalition = frozenset


class HedonicError(ValueError):
    """Base class for errors raised by this package."""


class DomainError(HedonicError):
    """An argument lies outside the operation's domain."""


class CapacityError(HedonicError):
    """A size cap was exceeded."""


class PreconditionError(HedonicError):
    """A preference restriction required by an algorithm does not hold."""

    def __init__(self, message: str, verdict=None):
        super().__init__(message)
        self.verdict = verdict


def check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise CapacityError(f"{what}: n={n} exceeds cap {cap}")


# --- coalitions -----------------------------------------------------------


def to_mask(members: Iterable[int]) -> int:
    mask = 0
    for i in members:
        if i < 1:
            raise DomainError(f"player ids are 1-based, got {i}")
        mask |= 1 << (i - 1)
    return mask


def from_mask(mask: int) -> frozenset[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def members_of(mask: int) -> list[int]:
    return sorted(from_mask(mask))


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def format_coalition(c: Iterable[int]) -> str:
    return ",".join(str(i) for i in sorted(c))


def coalitions_containing(i: int, n: int, cap: int = COALITION_CAP) -> list[frozenset[int]]:
    """All coalitions of ``{1..n}`` that contain ``i``, ascending by bitmask."""
    if not 1 <= i <= n:
        raise DomainError(f"player {i} not in 1..{n}")
    check_cap(n, cap, "coalitions_containing")
    bit = 1 << (i - 1)
    return [from_mask(m) for m in range(1, 1 << n) if m & bit]


def submasks_containing(mask: int, bit: int) -> Iterator[int]:
    """Submasks of ``mask`` that include ``bit``, in descending order."""
    rest = mask & ~bit
    s = rest
    while True:
        yield s | bit
        if s == 0:
            return
        s = (s - 1) & rest


# --- preferences ----------------------------------------------------------


class Pref(Enum):
    STRICTLY_PREFERS = "strictly-prefers"
    INDIFFERENT = "indifferent"
    STRICTLY_DISPREFERRED = "strictly-dispreferred"


class PreferenceProfile:
    """Per-player weak orders over the coalitions containing that player.

    ``tiers[i - 1][mask]`` is player ``i``'s rank tier for the coalition
    ``mask`` (lower is better, equal tiers are indifferent); entries for
    masks not containing ``i`` are ``-1``.  Tiers are normalised to
    ``0..k`` per player, so two profiles inducing the same orders compare
    equal.
    """

    __slots__ = ("n", "tiers", "_cache")

    def __init__(self, n: int, tiers: Sequence[Sequence[int]] | np.ndarray):
        if n < 1:
            raise DomainError("a game needs at least one player")
        check_cap(n, COALITION_CAP, "PreferenceProfile")
        arr = np.array(tiers, dtype=np.int64)
        if arr.shape != (n, 1 << n):
            raise DomainError(f"tier table must have shape {(n, 1 << n)}, got {arr.shape}")
        masks = np.arange(1 << n)
        for i in range(n):
            has = (masks >> i) & 1 == 1
            row = arr[i]
            if np.any(row[has] < 0):
                bad = int(masks[has][np.argmax(row[has] < 0)])
                raise DomainError(
                    f"player {i + 1} has no tier for coalition {{{format_coalition(from_mask(bad))}}}"
                )
            _, dense = np.unique(row[has], return_inverse=True)
            row[:] = -1
            row[has] = dense
        arr.setflags(write=False)
        self.n = n
        self.tiers = arr
        self._cache: dict = {}

    @classmethod
    def from_rankings(
        cls,
        n: int,
        rankings: Mapping[int, Sequence[Iterable[Iterable[int]]]],
        tail: bool = False,
    ) -> PreferenceProfile:
        """Build a profile from per-player tier lists.

        ``rankings[i]`` is a list of tiers, best first; each tier is a list of
        coalitions (iterables of player ids) that ``i`` is indifferent between.
        With ``tail=True`` every unlisted coalition joins one indifference
        class below all listed ones; otherwise listings must be complete.
        """
        table = np.full((n, 1 << n), -1, dtype=np.int64)
        for i in range(1, n + 1):
            tiers = rankings.get(i, [])
            bit = 1 << (i - 1)
            for t, tier in enumerate(tiers):
                for coal in tier:
                    m = to_mask(coal)
                    if not m & bit:
                        raise DomainError(f"player {i}: coalition {{{format_coalition(coal)}}} does not contain {i}")
                    if m >> n:
                        raise DomainError(f"player {i}: coalition {{{format_coalition(coal)}}} exceeds 1..{n}")
                    if table[i - 1, m] >= 0:
                        raise DomainError(f"player {i}: coalition {{{format_coalition(coal)}}} listed twice")
                    table[i - 1, m] = t
            if tail:
                for m in range(1, 1 << n):
                    if m & bit and table[i - 1, m] < 0:
                        table[i - 1, m] = len(tiers)
        return cls(n, table)

    def tier(self, i: int, mask: int) -> int:
        return int(self.tiers[i - 1, mask])

    def rankings(self) -> dict[int, list[list[frozenset[int]]]]:
        """Inverse of :meth:`from_rankings` (complete listing)."""
        out = {}
        for i in range(1, self.n + 1):
            row = self.tiers[i - 1]
            k = int(row.max()) + 1
            tiers: list[list[frozenset[int]]] = [[] for _ in range(k)]
            for m in range(1, 1 << self.n):
                if row[m] >= 0:
                    tiers[row[m]].append(from_mask(m))
            out[i] = tiers
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, PreferenceProfile):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.tiers, other.tiers)

    def __hash__(self) -> int:
        return hash((self.n, self.tiers.tobytes()))

    def __repr__(self) -> str:
        return f"PreferenceProfile(n={self.n})"


def compare(profile: PreferenceProfile, i: int, S: Iterable[int], T: Iterable[int]) -> Pref:
    """How player ``i`` ranks ``S`` against ``T``."""
    s, t = to_mask(S), to_mask(T)
    bit = 1 << (i - 1)
    if not (s & bit and t & bit):
        raise DomainError(f"player {i} must belong to both coalitions")
    if (s | t) >> profile.n:
        raise DomainError("coalition exceeds the player set")
    a, b = profile.tier(i, s), profile.tier(i, t)
    if a < b:
        return Pref.STRICTLY_PREFERS
    if a > b:
        return Pref.STRICTLY_DISPREFERRED
    return Pref.INDIFFERENT


# --- partitions -----------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    """A partition of ``{1..n}``; blocks are kept sorted by smallest member."""

    blocks: tuple[frozenset[int], ...]
    n: int = field(compare=False)

    def __init__(self, blocks: Iterable[Iterable[int]], n: int | None = None):
        bs = [frozenset(b) for b in blocks]
        if any(not b for b in bs):
            raise DomainError("partition blocks must be non-empty")
        seen: set[int] = set()
        for b in bs:
            if seen & b:
                raise DomainError(f"player(s) {sorted(seen & b)} appear in two blocks")
            seen |= b
        if n is None:
            n = max(seen) if seen else 0
        if seen != set(range(1, n + 1)):
            raise DomainError(f"blocks do not cover exactly 1..{n}")
        bs.sort(key=min)
        object.__setattr__(self, "blocks", tuple(bs))
        object.__setattr__(self, "n", n)

    @classmethod
    def from_masks(cls, masks: Iterable[int], n: int) -> Partition:
        return cls([from_mask(m) for m in masks], n)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> Partition:
        """Parse ``"1,2|3,4"`` style text."""
        text = text.strip()
        if not text:
            raise DomainError("empty partition string")
        blocks = []
        for part in text.split("|"):
            try:
                members = [int(tok) for tok in part.split(",")]
            except ValueError:
                raise DomainError(f"malformed block {part!r} in partition {text!r}") from None
            if len(set(members)) != len(members):
                raise DomainError(f"repeated player in block {part!r}")
            blocks.append(members)
        return cls(blocks, n)

    @classmethod
    def singletons(cls, n: int) -> Partition:
        return cls([[i] for i in range(1, n + 1)], n)

    @classmethod
    def grand(cls, n: int) -> Partition:
        return cls([range(1, n + 1)], n)

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(to_mask(b) for b in self.blocks)

    def block_of(self, i: int) -> frozenset[int]:
        for b in self.blocks:
            if i in b:
                return b
        raise DomainError(f"player {i} not in partition of 1..{self.n}")

    def block_masks_by_player(self) -> list[int]:
        out = [0] * self.n
        for b in self.blocks:
            m = to_mask(b)
            for i in b:
                out[i - 1] = m
        return out

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __str__(self) -> str:
        return "|".join(format_coalition(b) for b in self.blocks)

    def __repr__(self) -> str:
        return f"Partition({str(self)!r})"


def block_of(pi: Partition, i: int) -> frozenset[int]:
    return pi.block_of(i)


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length ``n`` in lexicographic order."""
    if n == 0:
        yield ()
        return
    a = [0] * n
    b = [1] * n  # b[k] = 1 + max(a[:k])
    while True:
        yield tuple(a)
        k = n - 1
        while k > 0 and a[k] == b[k]:
            k -= 1
        if k == 0:
            return
        a[k] += 1
        for j in range(k + 1, n):
            a[j] = 0
            b[j] = max(b[k], a[k] + 1)


def enumerate_partitions(n: int, cap: int = BRUTE_FORCE_CAP) -> Iterator[Partition]:
    """Every partition of ``{1..n}`` exactly once, in restricted-growth order."""
    check_cap(n, cap, "enumerate_partitions")
    for rgs in restricted_growth_strings(n):
        blocks: list[list[int]] = [[] for _ in range(max(rgs, default=-1) + 1)]
        for i, b in enumerate(rgs, start=1):
            blocks[b].append(i)
        yield Partition(blocks, n)


def size_vector(pi: Partition) -> tuple[int, ...]:
    return tuple(sorted((len(b) for b in pi.blocks), reverse=True))


class Order(Enum):
    GREATER = "greater"
    EQUAL = "equal"
    LESS = "less"


def compare_size_vectors(a: Sequence[int], b: Sequence[int]) -> Order:
    for x, y in zip(a, b):
        if x != y:
            return Order.GREATER if x > y else Order.LESS
    # equal sums force equal length once the common prefix agrees
    if len(a) == len(b):
        return Order.EQUAL
    return Order.GREATER if len(a) < len(b) else Order.LESS


def gdot_compare(pi: Partition, other: Partition) -> Order:
    """Lexicographic comparison of the non-increasing block-size vectors."""
    if pi.n != other.n:
        raise DomainError(f"partitions of different player sets ({pi.n} vs {other.n})")
    return compare_size_vectors(size_vector(pi), size_vector(other))


def integer_partition_count(n: int) -> int:
    """Number of partitions of the integer ``n``."""
    p = [1] + [0] * n
    for k in range(1, n + 1):
        for m in range(k, n + 1):
            p[m] += p[m - k]
    return p[n]


# --- cached partition tables ---------------------------------------------


def _pair_index(n: int) -> dict[tuple[int, int], int]:
    idx = {}
    for i in range(n):
        for j in range(i + 1, n):
            idx[i, j] = len(idx)
    return idx


class PartitionSpace:
    """All partitions of ``{1..n}`` with numpy lookup tables.

    ``block[p, i]`` is the bitmask of player ``i+1``'s block in partition
    ``p``; ``together[p]`` has bit ``k`` set when the k-th player pair shares
    a block; ``pairs_outside[H]`` selects the pairs with neither member in
    ``H``.
    """

    def __init__(self, n: int):
        self.n = n
        self.partitions = list(enumerate_partitions(n, cap=n))
        self.index = {p: k for k, p in enumerate(self.partitions)}
        count = len(self.partitions)
        self.block = np.zeros((count, n), dtype=np.int64)
        for k, p in enumerate(self.partitions):
            self.block[k] = p.block_masks_by_player()
        pairs = _pair_index(n)
        self.together = np.zeros(count, dtype=np.int64)
        for (i, j), bit in pairs.items():
            same = self.block[:, i] == self.block[:, j]
            self.together |= same.astype(np.int64) << bit
        full = (1 << n) - 1
        self.pairs_outside = np.zeros(1 << n, dtype=np.int64)
        for h in range(1 << n):
            rest = full & ~h
            v = 0
            for (i, j), bit in pairs.items():
                if rest >> i & 1 and rest >> j & 1:
                    v |= 1 << bit
            self.pairs_outside[h] = v
        self.size_vectors = [size_vector(p) for p in self.partitions]

    def __len__(self) -> int:
        return len(self.partitions)

    def lookup(self, pi: Partition) -> int:
        if pi.n != self.n:
            raise DomainError(f"partition of 1..{pi.n} used with a {self.n}-player game")
        return self.index[pi]


@lru_cache(maxsize=None)
def _space(n: int) -> PartitionSpace:
    return PartitionSpace(n)


def partition_space(n: int, cap: int = BRUTE_FORCE_CAP) -> PartitionSpace:
    check_cap(n, cap, "partition enumeration")
    return _space(n)


def partition_tiers(profile: PreferenceProfile, space: PartitionSpace) -> np.ndarray:
    """``out[p, i]`` is player ``i+1``'s tier for its block in partition ``p``."""
    key = ("ptiers", space.n)
    out = profile._cache.get(key)
    if out is None:
        out = profile.tiers[np.arange(space.n)[None, :], space.block]
        out.setflags(write=False)
        profile._cache[key] = out
    return out
