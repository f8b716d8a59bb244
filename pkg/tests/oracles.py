"""Independent reference computations used only by the tests.

Nothing here imports the package's presentation or invariant code: the
oracles work from raw PD quadruples, networkx and sympy.
"""

from __future__ import annotations

import itertools
import re

import networkx as nx
import sympy as sp

A = sp.Symbol("A")


def pd_quads(text):
    return [tuple(int(x) for x in m) for m in re.findall(r"X\[(\d+),(\d+),(\d+),(\d+)\]", text)]


def knot_crossing_arcs(text):
    """For a one-component PD code, list (under_in_arc, over_in_arc) per crossing.

    The strand follows labels 1, 2, ..., 2c; a passage sits at the head of
    its incoming arc.
    """
    quads = pd_quads(text)
    m = 2 * len(quads)
    out = []
    for a, b, c, d in quads:
        assert c == a % m + 1
        over_in = b if d == b % m + 1 else d
        out.append((a, over_in))
    return out, m


def brute_valid_arc_cuts(text, n):
    """All n-subsets of arcs whose cuts give a valid presentation of a knot PD.

    A cut placed inside arc ``L`` starts a new edge there; the passage at the
    head of arc ``k`` belongs to the edge started by the last cut at or
    before ``k`` going backwards round the strand.
    """
    sites, m = knot_crossing_arcs(text)
    valid = []
    for cuts in itertools.combinations(range(1, m + 1), n):
        def edge_of(k):
            starts = [c for c in cuts if c <= k]
            return max(starts) if starts else max(cuts)

        ok = True
        rel = {}
        for under_arc, over_arc in sites:
            eo, eu = edge_of(over_arc), edge_of(under_arc)
            if eo == eu:
                ok = False
                break
            key = frozenset((eo, eu))
            if rel.setdefault(key, eo) != eo:
                ok = False
                break
        if ok:
            valid.append(cuts)
    return valid


def bracket_oracle(text, unknots=0):
    """State sum with networkx loop counting and sympy arithmetic."""
    quads = pd_quads(text)
    c = len(quads)
    delta = -A**2 - A**-2
    total = sp.Integer(0)
    for state in itertools.product((0, 1), repeat=c):
        g = nx.Graph()
        g.add_nodes_from(range(1, 2 * c + 1))
        for (a, b, cc, d), s in zip(quads, state):
            if s == 0:  # A-smoothing
                g.add_edge(a, b)
                g.add_edge(cc, d)
            else:
                g.add_edge(a, d)
                g.add_edge(b, cc)
        loops = nx.number_connected_components(g) + unknots
        total += A ** (state.count(0) - state.count(1)) * delta ** (loops - 1)
    return sp.expand(total)


def sympy_to_terms(expr):
    expr = sp.expand(expr)
    poly = sp.Poly(expr * A**200, A)
    return {e[0] - 200: int(coef) for e, coef in zip(poly.monoms(), poly.coeffs())}


def has_cycle_by_subsets(n, arcs):
    """A digraph has a directed cycle iff some vertex subset has every
    vertex with an in-arc and an out-arc inside the subset."""
    for k in range(2, n + 1):
        for sub in itertools.combinations(range(n), k):
            s = set(sub)
            inner = [(u, v) for u, v in arcs if u in s and v in s]
            if all(any(u == x for u, _ in inner) and any(v == x for _, v in inner) for x in s):
                return True
    return False
