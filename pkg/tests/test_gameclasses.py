import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hedonic.core import CapacityError, DomainError, Pref, compare, to_mask
from hedonic.gameclasses import (
    KINDS,
    AshgMatrix,
    BRanking,
    ashg_to_profile,
    bhedonic_to_profile,
    enemies_game,
    friends_game,
    is_strict_ashg,
    is_symmetric,
    random_game,
)
from hedonic.restrictions import choice_sets, is_top_responsive
from naive import subsets


def test_friends_values():
    m = friends_game(3, {1: [2]})
    assert m.value(1, 2) == 3
    assert m.value(1, 3) == -1
    assert m.value(1, 1) == 0


def test_enemies_values():
    m = enemies_game(3, {1: [2]})
    assert m.value(1, 2) == 1
    assert m.value(1, 3) == -3


def test_empty_friendship_graph_prefers_singletons():
    m = friends_game(4, {})
    assert all(m.value(i, j) == -1 for i in range(1, 5) for j in range(1, 5) if i != j)
    g = ashg_to_profile(m)
    for i in range(1, 5):
        assert choice_sets(g, i, range(1, 5)).maximizers == {frozenset({i})}


def test_graph_validation():
    with pytest.raises(DomainError):
        friends_game(3, {1: [1]})
    with pytest.raises(DomainError):
        enemies_game(3, {4: [1]})
    with pytest.raises(DomainError):
        AshgMatrix([[0, 1], [1]])


def test_diagonal_ignored():
    assert AshgMatrix([[5, 1], [2, 7]]).values == ((0, 1), (2, 0))


def test_symmetry_and_strictness():
    assert is_symmetric(AshgMatrix([[0, 2], [2, 0]]))
    assert not is_symmetric(AshgMatrix([[0, 2], [1, 0]]))
    assert is_strict_ashg(enemies_game(3, {}))
    assert not is_strict_ashg(AshgMatrix([[0, 0], [1, 0]]))


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=1, max_value=5), st.integers(min_value=0, max_value=10_000),
       st.sampled_from(["ashg", "symmetric-ashg", "friends", "enemies"]))
def test_expansion_matches_utility_sums(n, seed, kind):
    game = random_game(kind, n, seed)
    m, g = game.payload, game.profile
    util = lambda i, S: sum(m.value(i, j) for j in S if j != i)  # noqa: E731
    for i in range(1, n + 1):
        mine = [S for S in subsets(range(1, n + 1)) if i in S]
        for S in mine:
            for T in mine:
                got = compare(g, i, S, T)
                if util(i, S) > util(i, T):
                    assert got is Pref.STRICTLY_PREFERS
                elif util(i, S) == util(i, T):
                    assert got is Pref.INDIFFERENT
                else:
                    assert got is Pref.STRICTLY_DISPREFERRED


def test_bhedonic_examples():
    # player 1 ranks 2 > 3 > 1
    g = bhedonic_to_profile(BRanking([[2, 3, 1], [1, 3, 2], [1, 2, 3]]))
    assert compare(g, 1, {1, 2}, {1, 3}) is Pref.STRICTLY_PREFERS
    assert compare(g, 1, {1, 2}, {1, 2, 3}) is Pref.STRICTLY_PREFERS
    assert compare(g, 1, {1, 3}, {1}) is Pref.STRICTLY_PREFERS
    assert is_top_responsive(g).holds


def test_bhedonic_indifference_completion():
    g = bhedonic_to_profile(BRanking([[2, 3, 4, 1], [1, 3, 4, 2], [1, 2, 4, 3], [1, 2, 3, 4]]))
    # same best member (2), same size
    assert compare(g, 1, {1, 2, 3}, {1, 2, 4}) is Pref.INDIFFERENT
    assert g.tier(1, to_mask({1, 2, 3})) == g.tier(1, to_mask({1, 2, 4}))


def test_bhedonic_rejects_weak_rankings():
    with pytest.raises(DomainError, match="strict"):
        BRanking([[2, 2, 1], [1, 3, 2], [1, 2, 3]])
    with pytest.raises(DomainError):
        BRanking([[2, 1], [1, 2, 3]])


def test_bhedonic_self_ranked_high_breaks_top_responsiveness():
    # player 3 puts itself first: {1,2,3} beats {1,3} though both choice sets are {3}
    g = bhedonic_to_profile(BRanking([[3, 2, 1], [1, 2, 3], [3, 2, 1]]))
    v = is_top_responsive(g)
    assert not v.holds
    assert v.witness.condition == "3"
    assert v.witness.players == (3,)


def test_bhedonic_mapping_input():
    r = BRanking({1: [2, 1], 2: [1, 2]})
    assert r.orders == ((2, 1), (1, 2))


def test_random_game_determinism():
    a = random_game("symmetric-friends", 4, 7)
    b = random_game("symmetric-friends", 4, 7)
    assert a == b
    assert a.profile == b.profile
    assert random_game("explicit", 4, 1).profile != random_game("explicit", 4, 2).profile


@pytest.mark.parametrize("kind", ["symmetric-ashg", "symmetric-friends", "symmetric-enemies"])
@pytest.mark.parametrize("seed", range(5))
def test_symmetric_kinds(kind, seed):
    assert is_symmetric(random_game(kind, 5, seed).payload)


@pytest.mark.parametrize("kind", KINDS)
def test_every_kind_expands(kind):
    g = random_game(kind, 4, 3)
    assert g.profile.n == 4
    assert g.n == 4


def test_random_game_rejects():
    with pytest.raises(DomainError):
        random_game("unknown", 3, 1)
    with pytest.raises(CapacityError):
        random_game("explicit", 17, 1)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=1, max_value=7), st.integers(min_value=0, max_value=10_000))
def test_bhedonic_generator_ranks_self_last(n, seed):
    orders = random_game("bhedonic-strict", n, seed).payload.orders
    assert all(o[-1] == i for i, o in enumerate(orders, 1))


def test_utilities_shape():
    from hedonic.gameclasses import utilities

    u = utilities(AshgMatrix([[0, 2, -1], [1, 0, 1], [0, 0, 0]]))
    assert u.shape == (3, 8)
    assert u[0, 0b111] == 1
    assert np.all(u[2] == 0)
