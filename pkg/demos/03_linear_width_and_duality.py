"""
Linear-width and its dual
=========================

The linear-width of (X, f) is the minimum, over orderings e1, ..., en of
the ground set, of the largest f-value of a prefix {e1, ..., ei}. It is
computed exactly by a dynamic program over subsets and cross-checked by
trying every permutation.

Linear-width is at least k+1 exactly when a single ideal of order k+1
satisfying IE exists, provided every singleton is k-efficient.
"""

from connwidth import (
    duality_check,
    find_single_ideal_with_IE,
    linear_width,
    linear_width_bruteforce,
    make_graph_cut,
    prefix_width,
)
from connwidth.generators import complete_graph, cycle_graph, path_graph

systems = {
    "P3": make_graph_cut(path_graph(3), "P3"),
    "C4": make_graph_cut(cycle_graph(4), "C4"),
    "K4": make_graph_cut(complete_graph(4), "K4"),
}

for name, s in systems.items():
    dp = linear_width(s)
    oracle = linear_width_bruteforce(s)
    print(name, dp.width, oracle.width, dp.ordering, prefix_width(s, dp.ordering))

# K4 at k = 3: width 4 >= 4 and the ideal search returns a witness family
k4 = systems["K4"]
print(find_single_ideal_with_IE(k4, 3).pretty())
print(duality_check(k4, 3).outcome)

# P3 at k = 2: width 1, and the exhaustive search proves no ideal exists
print(find_single_ideal_with_IE(systems["P3"], 2))

# Without the singleton condition the equivalence breaks: at k = 1 the
# middle vertex of P3 costs 2, yet {empty, {0}, {2}} is an ideal with IE.
rep = duality_check(systems["P3"], 1)
print(rep.outcome, rep.lw, rep.witness_family, rep.counts["claim_holds"])
