"""The four small games used as worked examples and counterexamples.

``example1``: top responsive and mutual, yet no perfect partition.
``example2``: strongly bottom responsive and mutual.
``prop2``: strict core and Nash stable partitions exist, strong Nash ones do not.
``prop3``: a strong Nash stable partition that is Pareto dominated.

``prop2`` and ``prop3`` list only each player's top coalitions; everything
unlisted is one indifference class at the bottom.
"""

from __future__ import annotations

from .core import PreferenceProfile

EXAMPLE1 = {
    1: [[{1, 2}], [{1, 2, 3}], [{1}], [{1, 3}]],
    2: [[{1, 2, 3}], [{1, 2}, {2, 3}], [{2}]],
    3: [[{2, 3}], [{1, 2, 3}], [{3}], [{1, 3}]],
}

EXAMPLE2 = {
    1: [[{1, 3}], [{1}], [{1, 2, 3}], [{1, 2}]],
    2: [[{2, 3}], [{2}], [{1, 2, 3}], [{1, 2}]],
    3: [[{1, 2, 3}], [{1, 3}, {2, 3}], [{3}]],
}

PROP2 = {
    1: [[{1, 2}], [{1, 4}], [{1}]],
    2: [[{2, 3}], [{1, 2}], [{2}]],
    3: [[{3, 4}], [{2, 3}], [{3}]],
    4: [[{1, 4}], [{3, 4}], [{4}]],
}

PROP3 = {
    1: [[{1, 2}, {1, 3}, {1, 4}]],
    2: [[{1, 2}, {2, 3}, {2, 4}]],
    3: [[{2, 3}, {3, 4}]],
    4: [[{1, 4}, {2, 4}], [{3, 4}]],
}

_TABLES = {
    "example1": (3, EXAMPLE1, False),
    "example2": (3, EXAMPLE2, False),
    "prop2": (4, PROP2, True),
    "prop3": (4, PROP3, True),
}

NAMES = tuple(_TABLES)


def listing(name: str) -> tuple[int, dict, bool]:
    """``(n, rankings, tail)`` for a bundled game."""
    try:
        return _TABLES[name]
    except KeyError:
        raise KeyError(f"unknown bundled game {name!r}; choose from {', '.join(NAMES)}") from None


def profile(name: str) -> PreferenceProfile:
    n, rankings, tail = listing(name)
    return PreferenceProfile.from_rankings(n, rankings, tail=tail)


def example1() -> PreferenceProfile:
    return profile("example1")


def example2() -> PreferenceProfile:
    return profile("example2")


def prop2() -> PreferenceProfile:
    return profile("prop2")


def prop3() -> PreferenceProfile:
    return profile("prop3")
