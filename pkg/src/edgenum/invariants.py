"""Kauffman bracket, Jones polynomial and diagrammatic bounds.

The bracket is an explicit state sum over all ``2**c`` smoothings, with loops
counted by union-find over arc labels.  For a PD crossing ``(a, b, c, d)`` the
A-smoothing joins ``(a, b)`` and ``(c, d)``; the B-smoothing joins ``(a, d)``
and ``(b, c)``.  With this choice the PD code ``X[1,4,2,5] X[3,6,4,1]
X[5,2,6,3]`` (writhe -3) has Jones polynomial ``-t^-4 + t^-3 + t^-1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .diagram import Diagram, DiagramError, Role, writhe
from .laurent import Laurent
from .presentation import CutSet, min_presentation, overpass_cut_set

__all__ = [
    "BRACKET_CAP",
    "Certificate",
    "Bounds",
    "bracket",
    "jones",
    "unlink_jones",
    "state_loop_counts",
    "nontriviality_certificate",
    "is_alternating",
    "is_reduced",
    "crossing_number_certificate",
    "overpass_count",
    "edge_number_bounds",
]

BRACKET_CAP = 24

# slot pairs joined by each smoothing, indices into the PD quadruple
A_PAIRS = ((0, 1), (2, 3))
B_PAIRS = ((0, 3), (1, 2))


class Certificate(enum.Enum):
    NONTRIVIAL_BY_JONES = "NontrivialByJones"
    UNKNOWN = "Unknown"


def _require_planar(d: Diagram, cap: int) -> None:
    if not d.has_planar_data:
        raise DiagramError("bracket needs planar (PD) data; Gauss input has none")
    if d.crossing_count > cap:
        raise DiagramError(f"{d.crossing_count} crossings exceeds the bracket cap of {cap}")


def _loops(d: Diagram, state: int) -> int:
    """Loops of the smoothing where bit k of ``state`` set means crossing k gets B."""
    n_arcs = 2 * d.crossing_count
    parent = list(range(n_arcs + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    merges = 0
    for k, x in enumerate(d.crossings):
        q = x.pd_labels
        for s, t in (B_PAIRS if state >> k & 1 else A_PAIRS):
            ra, rb = find(q[s]), find(q[t])
            if ra != rb:
                parent[ra] = rb
                merges += 1
    return n_arcs - merges + d.crossingless_components


def state_loop_counts(d: Diagram) -> tuple[int, int]:
    """Loop counts of the all-A and all-B states."""
    _require_planar(d, BRACKET_CAP)
    return _loops(d, 0), _loops(d, (1 << d.crossing_count) - 1)


def bracket(d: Diagram, cap: int = BRACKET_CAP) -> Laurent:
    """Kauffman bracket in ``A``, normalised so a crossingless circle is 1."""
    _require_planar(d, cap)
    c = d.crossing_count
    delta = Laurent({2: -1, -2: -1}, "A")
    # tally states by (a - b, loops) and expand once at the end
    tally: dict[tuple[int, int], int] = {}
    for state in range(1 << c):
        b = bin(state).count("1")
        key = (c - 2 * b, _loops(d, state))
        tally[key] = tally.get(key, 0) + 1
    total = Laurent({}, "A")
    powers: dict[int, Laurent] = {}
    for (shift, loops), count in tally.items():
        if loops - 1 not in powers:
            powers[loops - 1] = delta ** (loops - 1)
        total = total + Laurent.monomial(shift, count, "A") * powers[loops - 1]
    return total


def jones(d: Diagram, cap: int = BRACKET_CAP) -> Laurent:
    """Jones polynomial with exponents in units of ``t**(1/4)``.

    ``(-A**3)**(-w) * <D>`` evaluated at ``A = t**(-1/4)``.
    """
    w = writhe(d)
    f = Laurent.monomial(-3 * w, -1 if w % 2 else 1, "A") * bracket(d, cap)
    return f.substitute(-1, "t_quarter")


def unlink_jones(components: int) -> Laurent:
    delta = Laurent({2: -1, -2: -1}, "t_quarter")
    return delta ** (components - 1)


def nontriviality_certificate(d: Diagram, cap: int = BRACKET_CAP) -> Certificate:
    """Never claims triviality; Jones equal to the unlink value gives UNKNOWN."""
    if jones(d, cap) != unlink_jones(d.component_count):
        return Certificate.NONTRIVIAL_BY_JONES
    return Certificate.UNKNOWN


def is_alternating(d: Diagram) -> bool:
    for comp in d.components:
        m = len(comp)
        if any(comp[k].role is comp[(k + 1) % m].role for k in range(m)):
            return False
    return True


def is_reduced(d: Diagram) -> bool:
    """True when no crossing is nugatory.

    A crossing met at positions ``p1 < p2`` is nugatory when no other
    crossing has exactly one of its passages strictly between them.
    """
    if d.component_count != 1:
        raise ValueError("reducedness is only checked for knot diagrams")
    where: dict[int, list[int]] = {}
    for p in d.components[0]:
        where.setdefault(p.crossing_id, []).append(p.position)
    for cid, (p1, p2) in where.items():
        lo, hi = sorted((p1, p2))
        if not any(
            (lo < q1 < hi) != (lo < q2 < hi)
            for other, (q1, q2) in where.items() if other != cid
        ):
            return False
    return True


def crossing_number_certificate(d: Diagram) -> Optional[int]:
    """Crossing count when the diagram is reduced and alternating, else None."""
    if is_alternating(d) and is_reduced(d):
        return d.crossing_count
    return None


def overpass_count(d: Diagram) -> int:
    total = 0
    for comp in d.components:
        m = len(comp)
        roles = {p.role for p in comp}
        if len(roles) < 2:
            total += 1
            continue
        total += sum(
            1 for k in range(m)
            if comp[k].role is Role.OVER and comp[k - 1].role is Role.UNDER
        )
    return total


@dataclass(frozen=True)
class Bounds:
    """Bounds on the edge number; ``e_upper`` is the diagram value e(D)."""

    e_lower: int
    e_lower_reason: str
    e_upper: int
    e_upper_witness: CutSet
    bridge_upper: int


def edge_number_bounds(d: Diagram, cap: int = BRACKET_CAP, search=None) -> Bounds:
    """Lower bound from the Jones certificate, upper bound from the search.

    ``search`` may pass a precomputed ``SearchResult`` for ``d``.
    """
    k = d.component_count
    if k == 1:
        lower, reason = 1, "trivial-case"
        try:
            if nontriviality_certificate(d, cap) is Certificate.NONTRIVIAL_BY_JONES:
                lower, reason = 3, "jones-nontrivial"
        except DiagramError:
            pass
    else:
        lower, reason = k, "component-count"
    overpass = overpass_count(d)
    result = search if search is not None else min_presentation(d)
    fallback = overpass_cut_set(d)
    if result.minimal_n is not None and result.minimal_n <= fallback.n:
        upper, witness = result.minimal_n, result.witness
    else:
        upper, witness = fallback.n, fallback
    return Bounds(lower, reason, upper, witness, overpass)
