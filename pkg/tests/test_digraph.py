import networkx as nx
import pytest
from hypothesis import given, strategies as st

from oracles import has_cycle_by_subsets
from edgenum.digraph import OverDigraph, build, classify, describe, sources_sinks, to_dot
from edgenum.presentation import CutSet, check_presentation, overpass_cut_set


def present(d, text):
    p = check_presentation(d, CutSet.from_text(text))
    assert p.valid
    return p


def test_trefoil_three_cycle(trefoil):
    g = build(present(trefoil, "1,3,5"))
    assert sorted(g.arcs) == [(0, 1), (1, 2), (2, 0)]
    c = classify(g)
    assert c.connected and c.has_directed_cycle and c.is_directed_n_cycle
    assert not c.is_path
    assert c.max_successive_distance == 1
    assert describe(c, 3) == "directed 3-cycle"


def test_hopf_path(hopf):
    g = build(present(hopf, "0,1;0"))
    c = classify(g)
    assert c.is_path and c.connected and not c.has_directed_cycle
    assert describe(c, 3) == "path"
    # e1 and e2 are successive on the first component but joined only through e3
    assert c.max_successive_distance == 2


def test_single_vertex(unknot):
    g = build(present(unknot, "0"))
    c = classify(g)
    assert g.arcs == () and c.connected and not c.has_directed_cycle
    assert describe(c, 1) == "single vertex"
    assert c.max_successive_distance == 0


def test_overpass_digraph_is_acyclic(census_diagrams):
    for name, d in census_diagrams.items():
        c = classify(build(check_presentation(d, overpass_cut_set(d))))
        assert not c.has_directed_cycle, name


def test_invalid_graphs_rejected():
    with pytest.raises(ValueError):
        OverDigraph(2, ((0, 0),))
    with pytest.raises(ValueError):
        OverDigraph(2, ((0, 1), (1, 0)))


def test_sources_sinks():
    g = OverDigraph(3, ((0, 1), (1, 2), (2, 0)))
    assert sources_sinks(g) == (set(), set())
    assert sources_sinks(g, without_arc=(2, 0)) == ({0}, {2})
    assert sources_sinks(g, without_arc=(0, 2)) == (set(), set())


def test_disconnected_description():
    c = classify(OverDigraph(4, ((0, 1), (2, 3))))
    assert not c.connected and describe(c, 4) == "disconnected"
    c = classify(OverDigraph(3, ((0, 1), (0, 2), (1, 2))))
    assert describe(c, 3) == "acyclic"


def test_dot_output(trefoil):
    p = present(trefoil, "1,3,5")
    text = to_dot(build(p))
    assert text.splitlines()[0] == "digraph G {"
    assert "  e1;" in text
    assert '  e1 -> e2 [label="2"];' in text
    assert text.rstrip().endswith("}")
    labelled = to_dot(build(p), [e.label() for e in p.edges], name="trefoil")
    assert 'e1 [label="{O2,U1}"];' in labelled and labelled.startswith("digraph trefoil {")


@st.composite
def oriented_graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    arcs = tuple((j, i) if draw(st.booleans()) else (i, j) for i, j in chosen)
    return OverDigraph(n, arcs)


@given(oriented_graphs())
def test_cycle_detection_matches_subset_oracle(g):
    assert classify(g).has_directed_cycle == has_cycle_by_subsets(g.n, g.arcs)


@given(oriented_graphs())
def test_shape_matches_networkx(g):
    ug = nx.Graph()
    ug.add_nodes_from(range(g.n))
    ug.add_edges_from(g.arcs)
    c = classify(g)
    assert c.connected == nx.is_connected(ug)
    is_path = nx.is_connected(ug) and nx.is_tree(ug) and max(dict(ug.degree).values(), default=0) <= 2
    assert c.is_path == is_path
    dg = nx.DiGraph(list(g.arcs))
    dg.add_nodes_from(range(g.n))
    assert c.has_directed_cycle == (not nx.is_directed_acyclic_graph(dg))
    for u, v, dist in c.successive_distances:
        expected = nx.shortest_path_length(ug, u, v) if nx.has_path(ug, u, v) else None
        assert dist == expected
