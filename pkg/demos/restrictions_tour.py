"""
Preference restrictions on small games
======================================

Choice sets, avoid sets, and the top/bottom responsiveness checks on the
bundled three-player games, plus a game built from a friendship graph.
"""

from hedonic import corpus
from hedonic.gameclasses import ashg_to_profile, enemies_game, friends_game
from hedonic.restrictions import avoid_sets, check_all, choice_sets

# the first bundled game: optimistic players
g = corpus.example1()
for i in (1, 2, 3):
    best = choice_sets(g, i, {1, 2, 3}).maximizers
    print(f"player {i} most wants", [sorted(c) for c in best])

# every restriction at once; a mutuality entry is None when its base fails
for name, verdict in check_all(g).items():
    print(f"{name:<10}", "n/a" if verdict is None else verdict)

# the second bundled game: pessimistic players
h = corpus.example2()
print("player 1 most dreads", [sorted(c) for c in avoid_sets(h, 1, {1, 2, 3}).minimizers])
for name, verdict in check_all(h).items():
    print(f"{name:<10}", "n/a" if verdict is None else verdict)

# graph games: friends give top responsiveness, enemies give bottom responsiveness
line = {1: [2], 2: [1, 3], 3: [2]}
print("friends on a path:", check_all(ashg_to_profile(friends_game(3, line)))["TR-mutual"])
print("enemies on a path:", check_all(ashg_to_profile(enemies_game(3, line)))["BR-mutual"])

# a one-sided friendship breaks mutuality
lopsided = ashg_to_profile(enemies_game(2, {1: [2]}))
print("one-sided:", check_all(lopsided)["BR-mutual"])
