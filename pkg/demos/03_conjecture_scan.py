"""
Do over/under digraphs always contain a cycle?
==============================================

Scanning every valid presentation of a diagram separates two readings of
the question: over all presentations, or only over those with the fewest
edges.  The overpass presentation is always acyclic, so the first reading
fails on every knot with crossings.
"""

from edgenum import load_census, scan_conjecture

for record in load_census():
    d = record.diagram()
    if not d.is_knot:
        continue
    res = scan_conjecture(d)
    print(f"{record.name:7s} valid={res.total_valid:6d} cyclic={res.cyclic:6d} acyclic={res.acyclic:6d} "
          f"minimal n={res.minimal_n}  universal: {res.universal:8s} minimal: {res.minimal}")

# One acyclic witness for the trefoil, as DOT.
trefoil = load_census()[1].diagram()
witness = scan_conjecture(trefoil, max_witnesses=1).acyclic_witnesses[0]
print("cuts", witness["cuts"])
print(witness["dot"])
