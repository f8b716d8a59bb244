import pytest
from hypothesis import given, strategies as st

from conftest import CINQUEFOIL, FIGURE_EIGHT, KINK, TREFOIL
from oracles import bracket_oracle, pd_quads, sympy_to_terms
from edgenum.diagram import DiagramError, mirror, parse_gauss, parse_pd
from edgenum.invariants import (
    Certificate,
    bracket,
    crossing_number_certificate,
    edge_number_bounds,
    is_alternating,
    is_reduced,
    jones,
    nontriviality_certificate,
    overpass_count,
    state_loop_counts,
    unlink_jones,
)
from edgenum.laurent import Laurent
from edgenum.presentation import CutSet


def tq(poly_in_t):
    """Laurent in t_quarter units from {integer exponent of t: coefficient}."""
    return Laurent({4 * e: c for e, c in poly_in_t.items()}, "t_quarter")


def test_trefoil_bracket_fixture(trefoil):
    # eight states worked by hand
    assert bracket(trefoil) == Laurent({7: 1, 3: -1, -5: -1}, "A")
    assert state_loop_counts(trefoil) == (3, 2)


def test_trefoil_jones(trefoil):
    assert jones(trefoil) == tq({-4: -1, -3: 1, -1: 1})
    assert str(jones(trefoil)) == "-t^-4 + t^-3 + t^-1"
    assert jones(mirror(trefoil)) == tq({4: -1, 3: 1, 1: 1})


def test_unlinks(unknot):
    assert jones(unknot) == 1
    assert bracket(parse_pd("unknot(2)")) == Laurent({2: -1, -2: -1}, "A")
    assert jones(parse_pd("unknot(2)")) == unlink_jones(2)
    assert str(unlink_jones(2)) == "-t^(-1/2) - t^(1/2)"


def test_kink_is_unknown():
    d = parse_pd(KINK)
    assert jones(d) == 1
    assert nontriviality_certificate(d) is Certificate.UNKNOWN


def test_figure_eight_and_cinquefoil():
    f8 = jones(parse_pd(FIGURE_EIGHT))
    assert f8 == tq({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1})
    assert f8.is_palindromic()
    assert jones(parse_pd(CINQUEFOIL)) == tq({-7: -1, -6: 1, -5: -1, -4: 1, -2: 1})


def test_hopf_jones(hopf):
    v = jones(hopf)
    # -t^(1/2) - t^(5/2) for one orientation, its mirror for the other
    assert v in (Laurent({-2: -1, -10: -1}, "t_quarter"), Laurent({2: -1, 10: -1}, "t_quarter"))
    assert nontriviality_certificate(hopf) is Certificate.NONTRIVIAL_BY_JONES


def test_bracket_matches_oracle_on_census(census):
    for r in census:
        d = r.diagram()
        if d.crossing_count == 0:
            continue
        expected = sympy_to_terms(bracket_oracle(r.pd, d.crossingless_components))
        assert bracket(d).terms == expected, r.name


def test_mirror_negates_exponents(census_diagrams):
    for d in census_diagrams.values():
        assert jones(mirror(d)) == jones(d).negate_exponents()


def test_loop_count_bound(census_diagrams):
    for d in census_diagrams.values():
        a, b = state_loop_counts(d)
        assert a + b <= d.crossing_count + 2


def _rotate(text, k):
    quads = pd_quads(text)
    m = 2 * len(quads)
    return " ".join("X[%d,%d,%d,%d]" % tuple((x - 1 + k) % m + 1 for x in q) for q in quads)


@given(st.sampled_from([TREFOIL, FIGURE_EIGHT, CINQUEFOIL]), st.integers(0, 9))
def test_jones_ignores_base_point(text, k):
    assert jones(parse_pd(_rotate(text, k))) == jones(parse_pd(text))


def test_gauss_input_rejected():
    d = parse_gauss("O1+U2+O3+U1+O2+U3+")
    with pytest.raises(DiagramError):
        bracket(d)


def test_cap_enforced(trefoil):
    with pytest.raises(DiagramError):
        jones(trefoil, cap=2)


def test_alternating_reduced(trefoil, unknot):
    assert is_alternating(trefoil) and is_reduced(trefoil)
    assert crossing_number_certificate(trefoil) == 3
    kink = parse_pd(KINK)
    assert not is_reduced(kink)
    assert crossing_number_certificate(kink) is None
    assert crossing_number_certificate(unknot) == 0


def test_reduced_rejects_links(hopf):
    with pytest.raises(ValueError):
        is_reduced(hopf)


def test_overpass_counts(trefoil, unknot, hopf):
    assert overpass_count(trefoil) == 3
    assert overpass_count(unknot) == 1
    assert overpass_count(hopf) == 2


def test_bounds(trefoil, unknot, hopf):
    b = edge_number_bounds(trefoil)
    assert (b.e_lower, b.e_upper, b.bridge_upper) == (3, 3, 3)
    assert b.e_lower_reason == "jones-nontrivial"
    assert b.e_upper_witness == CutSet.from_text("0,2,4")
    b = edge_number_bounds(unknot)
    assert (b.e_lower, b.e_upper, b.e_lower_reason) == (1, 1, "trivial-case")
    b = edge_number_bounds(hopf)
    assert (b.e_lower, b.e_upper, b.e_lower_reason) == (2, 3, "component-count")


def test_bounds_on_gauss_input_falls_back():
    b = edge_number_bounds(parse_gauss("O1+U2+O3+U1+O2+U3+"))
    assert b.e_lower == 1 and b.e_upper == 3
