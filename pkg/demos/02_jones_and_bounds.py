"""
Jones polynomial and edge-number bounds
=======================================

A Jones polynomial different from 1 certifies that a knot is nontrivial,
which forces at least three edges.  The search on the diagram gives an
upper bound, and the overpass count a second, coarser one.
"""

from edgenum import edge_number_bounds, jones, load_census, mirror

for record in load_census():
    d = record.diagram()
    b = edge_number_bounds(d)
    line = f"{record.name:7s} c={d.crossing_count}  e in [{b.e_lower}, {b.e_upper}]  overpasses={b.bridge_upper}"
    if d.is_knot:
        line += f"  V={jones(d)}"
    print(line)

# Mirroring a diagram negates the exponents of its Jones polynomial.
trefoil = load_census()[1].diagram()
print("trefoil:", jones(trefoil), "| mirror:", jones(mirror(trefoil)))
