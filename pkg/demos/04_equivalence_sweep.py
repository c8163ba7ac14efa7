"""
Sweeping every family
=====================

theorem1_crosscheck enumerates every family of k-efficient sets and asks
whether "single ideal satisfying IE" and "linear obstacle" agree. Families
where they disagree are re-checked by a separately written evaluator
before being reported.
"""

import json

from connwidth import IhVariant, elements_of, make_graph_cut, theorem1_crosscheck
from connwidth.generators import complete_graph, star_graph

k4 = make_graph_cut(complete_graph(4), "K4")

for variant in IhVariant:
    rep = theorem1_crosscheck(k4, 3, variant, slow_path="all")
    c = rep.counts
    print(variant.value, rep.outcome, c["families"], c["single_ideals"], c["linear_obstacles"],
          c["forward_mismatches"], c["reverse_mismatches"], c["disagreements"])

# Every single ideal with IE is a linear obstacle. The converse fails:
# an obstacle may choose {0, 1, 2} over its complement {3} and then SIS
# asks for {3} to be added to the empty set.
rep = theorem1_crosscheck(k4, 3)
first = rep.mismatches[0]
print([elements_of(m) for m in first["family"]])
print(json.dumps(first["single_ideal"]["reports"], indent=1))

# The family of all k-efficient sets is always an obstacle but contains X.
star = make_graph_cut(star_graph(4), "S3")
rep = theorem1_crosscheck(star, 3)
full = [m for m in rep.mismatches if star.full in m["family"]]
print(len(full), [r["axiom"] for r in full[-1]["single_ideal"]["reports"]])
