"""
Single ideals and linear obstacles
==================================

Two axiom systems on a family S of subsets, both relative to an order k+1:

single ideal   IB every member is k-efficient (f <= k)
               IH proper subsets of members are members
               SIS a member plus a cheap element, if still k-efficient, is a member
               IW the ground set is not a member
               IE (extra) exactly one of A, X - A is a member, for k-efficient A

linear obstacle O1 every member is k-efficient
               O2 k-efficient subsets of members are members
               O3 of two disjoint k-efficient sets covering all but at most
                  one element, at least one is a member

IH comes in two readings. ``literal`` demands every proper subset;
``guarded`` only the k-efficient ones, the same guard O2 has.
"""

from connwidth import (
    IhVariant,
    SetFamily,
    check_IH,
    elements_of,
    is_linear_obstacle,
    is_single_ideal,
)
from connwidth.generators import complete_graph, cycle_graph, path_graph
from connwidth import make_graph_cut

k4 = make_graph_cut(complete_graph(4), "K4")

# Every singleton cut of K4 is 3 and every 2/2 cut is 4, so at k = 3 the
# family {empty, {0}, {1}, {2}, {3}} satisfies both systems.
family = SetFamily.from_elements([[], [0], [1], [2], [3]])
print(is_single_ideal(k4, family, 3, require_IE=True))
print(is_linear_obstacle(k4, family, 3))

# Failures come with witnesses: the sets (and element) at which the
# quantified clause is false.
p3 = make_graph_cut(path_graph(3), "P3")
ok, failures = is_single_ideal(p3, SetFamily.from_elements([[], [0]]), 2)
for rep in failures:
    print(rep.axiom.value, [elements_of(m) for m in rep.witnesses], rep.element, rep.note)

ok, failures = is_linear_obstacle(p3, SetFamily.from_elements([[], [0]]), 2)
for rep in failures:
    print(rep.axiom.value, [elements_of(m) for m in rep.witnesses], rep.note)

# The IH readings differ on the cycle C4 at k = 2: {0, 2} has cut 4, so
# only the literal reading requires it below {0, 1, 2}.
c4 = make_graph_cut(cycle_graph(4), "C4")
fam = SetFamily.from_elements([[], [0], [1], [2], [0, 1], [1, 2], [0, 1, 2]])
print(check_IH(c4, fam, 2, IhVariant.LITERAL))
print(check_IH(c4, fam, 2, IhVariant.GUARDED))
