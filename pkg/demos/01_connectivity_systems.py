"""
Connectivity systems
====================

A connectivity system is a finite ground set together with a symmetric
submodular function on its subsets. connwidth stores the function as a
dense table indexed by bit mask: bit i of the mask is set iff element i is
in the subset.
"""

from connwidth import (
    Graph,
    check_lemma1,
    elements_of,
    make_explicit,
    make_graph_boundary,
    make_graph_cut,
    mask_of,
    validate_symmetric_submodular,
)

# The path 0 - 1 - 2. Its cut function counts edges leaving a vertex set.
p3 = Graph(3, ((0, 1), (1, 2)))
cut = make_graph_cut(p3, "P3")

for mask in range(cut.size):
    print(f"f({elements_of(mask)}) = {cut(mask)}")

# The middle vertex is the expensive one
print(cut(mask_of([1])))  # 2

# The boundary function lives on edges instead: f(A) counts vertices that
# touch both A and the remaining edges.
boundary = make_graph_boundary(p3, "P3")
print(boundary(mask_of([0])))  # vertex 1 is shared -> 1

# Both conditions are checked exhaustively: symmetry over 2^n masks,
# submodularity over all 4^n pairs.
print(validate_symmetric_submodular(cut))

# Hand-written tables are checked on construction unless validate=False
broken = make_explicit(2, [2, 0, 0, 2], validate=False)
report = validate_symmetric_submodular(broken)
print(report.axiom.value, report.holds, [elements_of(m) for m in report.witnesses], report.note)

# The two derived inequalities (f(A) >= f(empty) = f(X), and the
# difference form of submodularity) follow; they are swept the same way.
print(check_lemma1(cut).outcome)
