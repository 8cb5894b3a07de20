"""
Constructing stable partitions
==============================

The top covering algorithm for optimistic players, improving dynamics for
pessimistic ones, and the exhaustive maximal-partition search.
"""

from hedonic import corpus
from hedonic.gameclasses import random_game
from hedonic.solvers import deviation_dynamics, find_gdot_maximal_IR, top_covering
from hedonic.stability import is_strict_strong_nash_stable, is_strong_nash_stable

# top covering peels off the smallest connected component each round
g = corpus.example1()
pi, trace = top_covering(g)
print("\n".join(trace.lines()))
print("result", pi, "SSNS:", is_strict_strong_nash_stable(g, pi).stable)

friends = random_game("symmetric-friends", 6, seed=3)
pi, trace = top_covering(friends.profile)
print(friends.adjacency, "->", pi)

# dynamics start from singletons; the sorted block sizes climb every step
enemies = random_game("enemies", 6, seed=5)
for mode in ("IS", "SIS"):
    pi, trace = deviation_dynamics(enemies.profile, mode)
    print(mode, pi)
    for line, vec in zip(trace.lines(), trace.potential_vectors[1:]):
        print("  ", line, vec)

# with mutual aversion the largest admissible partition is strong Nash stable
sym = random_game("symmetric-enemies", 6, seed=5).profile
pi = find_gdot_maximal_IR(sym)
print("maximal", pi, "SNS:", is_strong_nash_stable(sym, pi).stable)

# the second bundled game has a single best answer
print(find_gdot_maximal_IR(corpus.example2()))
