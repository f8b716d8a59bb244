import pytest
from hypothesis import given, strategies as st

from conftest import HOPF, KINK, TREFOIL
from oracles import pd_quads
from edgenum.diagram import DiagramError, Role, mirror, parse_diagram, parse_gauss, parse_pd, writhe


def roles(d, comp=0):
    return [p.role for p in d.components[comp]]


O, U = Role.OVER, Role.UNDER


def test_trefoil_pd_passages(trefoil):
    assert trefoil.crossing_count == 3
    assert trefoil.component_count == 1
    assert roles(trefoil) == [O, U, O, U, O, U]
    # hand trace: arc 1 leaves crossing 2 on top, then under at crossing 1, ...
    assert [str(p) for p in trefoil.components[0]] == ["O2", "U1", "O3", "U2", "O1", "U3"]


def test_trefoil_writhe_fixture(trefoil):
    # X[1,4,2,5]: under 1->2 (south to north), over 4->5 (east to west): negative.
    assert [x.sign for x in trefoil.crossings] == [-1, -1, -1]
    assert writhe(trefoil) == -3


def test_unknot_token():
    d = parse_pd("unknot(1)")
    assert d.crossing_count == 0
    assert d.crossingless_components == 1
    assert d.components == ((),)
    assert writhe(d) == 0


def test_hopf_components(hopf):
    assert hopf.component_count == 2
    for comp in hopf.components:
        assert sorted(p.role.value for p in comp) == ["O", "U"]


@pytest.mark.parametrize("text", [
    "X[1,4,3,2] X[2,3,4,1]",     # component labels {1,3},{2,4} are not contiguous
    "X[1,4,2,5] X[3,6,4,1] X[5,2,6,7]",  # label out of range
    "X[1,4,2,5] X[3,6,4,1] X[5,2,6,2]",  # label 2 used three times
    "X[2,4,1,5] X[3,6,4,1] X[5,2,6,3]",  # under strand runs backwards
    "",
    "Y[1,2,3,4]",
])
def test_pd_errors(text):
    with pytest.raises(DiagramError):
        parse_pd(text)


def test_two_arc_kinks_parse_both_ways():
    # both one-crossing curls are legal; the over strand of a two-arc loop is
    # oriented so that each arc has one head and one tail
    a, b = parse_pd("X[1,1,2,2]"), parse_pd(KINK)
    assert a.crossing_count == b.crossing_count == 1
    assert {writhe(a), writhe(b)} == {1, -1}


def test_gauss_parse():
    d = parse_gauss("O1+U2+O3+U1+O2+U3+")
    assert d.crossing_count == 3
    assert roles(d) == [O, U, O, U, O, U]
    assert writhe(d) == 3
    assert not d.has_planar_data


def test_gauss_kink():
    d = parse_gauss("O1+U1+")
    assert d.crossing_count == 1


@pytest.mark.parametrize("text", ["O1+U1-", "O1+O1+", "O1+U2+", "Q1+", ""])
def test_gauss_errors(text):
    with pytest.raises(DiagramError):
        parse_gauss(text)


def test_gauss_without_signs_has_no_writhe():
    d = parse_gauss("O1U2O3U1O2U3")
    with pytest.raises(DiagramError):
        writhe(d)


def test_gauss_links_and_empty_components():
    d = parse_gauss("O1-U2-;U1-O2-;")
    assert d.component_count == 3
    assert d.crossingless_components == 1


def test_mirror_trefoil(trefoil):
    m = mirror(trefoil)
    assert roles(m) == [U, O, U, O, U, O]
    assert writhe(m) == 3
    assert mirror(m) == trefoil


def test_mirror_unknot(unknot):
    assert mirror(unknot) == unknot


def test_census_invariants(census_diagrams):
    for d in census_diagrams.values():
        passages = [p for comp in d.components for p in comp]
        assert len(passages) == 2 * d.crossing_count
        for x in d.crossings:
            assert sorted(p.role.value for p in passages if p.crossing_id == x.id) == ["O", "U"]
        assert mirror(mirror(d)) == d
        assert writhe(mirror(d)) == -writhe(d)
        assert parse_pd(d.to_pd()) == d
        assert parse_pd(mirror(d).to_pd()) == mirror(d)
        if d.crossing_count:
            assert parse_gauss(d.to_gauss()).components == d.components


def test_serialiser_is_canonical():
    d = parse_pd("X[1, 4,2,5],  X[3,6,4,1]\nX[5,2,6,3]")
    assert d.to_pd() == TREFOIL
    assert parse_pd("unknot(2)").to_pd() == "unknot(2)"


def test_dispatch():
    assert parse_diagram(HOPF).component_count == 2
    assert parse_diagram("O1-U1-").source == "gauss"


def _rotate_pd(quads, k):
    m = 2 * len(quads)
    return " ".join("X[%d,%d,%d,%d]" % tuple((x - 1 + k) % m + 1 for x in q) for q in quads)


@given(st.integers(0, 9))
def test_rerooting_keeps_role_sequence_cyclically(k):
    d = parse_pd(TREFOIL)
    r = parse_pd(_rotate_pd(pd_quads(TREFOIL), k))
    a, b = d.role_string(), r.role_string()
    assert b in a + a
    assert writhe(r) == writhe(d)
