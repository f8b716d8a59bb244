"""
Cutting the trefoil into edges
==============================

A cut set places vertices in the gaps between consecutive passages of the
strand.  A cut set is a valid presentation when no edge crosses itself and
every pair of edges meets consistently (always over, or always under).
"""

from edgenum import CutSet, check_presentation, enumerate_cut_sets, min_presentation, parse_pd

trefoil = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")
print("passages:", " ".join(str(p) for p in trefoil.components[0]))

# One or two edges never work: an edge meets itself, or two edges swap roles.
for n in (1, 2):
    reasons = {check_presentation(trefoil, s).condition for s in enumerate_cut_sets(trefoil, n)}
    print(f"n={n}: every cut set fails (conditions violated: {sorted(reasons)})")

# The exhaustive search stops at the first n with a valid cut set.
result = min_presentation(trefoil)
print("minimal n:", result.minimal_n, "witness:", result.witness.to_text())

# Each valid three-edge presentation is an oriented triangle.
p = check_presentation(trefoil, CutSet.from_text("1,3,5"))
for e in p.edges:
    print(f"e{e.index + 1} = {e.label()}")
print("relations:", ", ".join(p.table_lines()))
