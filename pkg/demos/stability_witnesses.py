"""
Stability verdicts and their witnesses
======================================

Every negative verdict carries a deviation that can be replayed.  The two
four-player games here separate concepts that look alike.
"""

from hedonic import corpus
from hedonic.core import Partition
from hedonic.stability import Concept, check, confirms_violation, stability_table

g = corpus.prop2()

# a partition that is strictly core stable and Nash stable ...
pi = Partition.parse("1,2|3,4", 4)
table = stability_table(g, pi)
print(pi, {c.value: ok for c, ok in table.items()})

# ... yet a pair of players can swap and both gain
v = check(g, pi, Concept.SNS)
print(v)
print("witness replays:", confirms_violation(g, pi, v))

# the swapped partition has the same weakness
print(check(g, Partition.parse("1,4|2,3", 4), "SNS"))

# a strong Nash stable partition that is still Pareto dominated
h = corpus.prop3()
pi = Partition.parse("1,2|3,4", 4)
print(check(h, pi, "SNS"))
print(check(h, pi, "PO"))
print(check(h, pi, "SC"))

# the inclusion lattice, checked partition by partition
from hedonic.stability import check_hierarchy  # noqa: E402

print("lattice violations:", check_hierarchy(g), check_hierarchy(h))
