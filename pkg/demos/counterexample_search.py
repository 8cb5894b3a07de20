"""
Searching game families for counterexamples
===========================================

Exhaustive scans certify small claims: symmetric enemies games can have an
empty strict core, while symmetric friends games never lack a strictly
strong Nash stable partition.
"""

import json
import time

from hedonic.gamefile import game_to_dict
from hedonic.oracle import Family, all_stable, search_counterexample, stable_set_empty, survey

t0 = time.perf_counter()
hit = search_counterexample(Family("symmetric-enemies", (5, 6, 7)), stable_set_empty("SC"), budget=500)
print(f"found seed {hit.seed} in {time.perf_counter() - t0:.2f}s")
print(json.dumps(game_to_dict(hit.game)["adjacency"]))
print("strict core:", all_stable(hit.game.profile, "SC"))

# the same search finds nothing for friends
miss = search_counterexample(Family("symmetric-friends", (3, 4, 5, 6)), stable_set_empty("SSNS"), budget=200)
print("friends counterexample:", miss)

# every concept at once, with the inclusion lattice checked on the side
print(survey(hit.game.profile, hit.game.name).table())
