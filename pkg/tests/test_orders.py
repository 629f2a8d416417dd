from itertools import combinations, permutations

import pytest
from hypothesis import given, strategies as st

from cyclord import oracles
from cyclord.errors import (
    EmptyHost,
    EndpointsEqual,
    MalformedTriple,
    NotConvex,
    NotDisjoint,
    NotDistinct,
    UnknownElement,
)
from cyclord.orders import (
    ConvexSet,
    Cut,
    FiniteCircularOrder,
    FiniteLinearOrder,
    PointCut,
    TernaryRelationTable,
    circ_from_linear,
    classify_cut,
    cut_at,
    enumerate_cuts,
    intersect_intervals,
    is_convex,
    is_cycle,
    order_from_relation,
    three_convex_position,
    verify_circular_axioms,
)

C = FiniteCircularOrder.standard


# --- axioms -----------------------------------------------------------------


def test_standard_relation_passes():
    rep = verify_circular_axioms(C(5).to_table())
    assert rep.ok and str(rep) == "axioms: pass"


def test_extra_reversed_triple_fails_asymmetry():
    R = set(C(5).to_table().triples) | {(2, 1, 0)}
    rep = verify_circular_axioms(TernaryRelationTable(5, frozenset(R)))
    assert rep.axiom == "Asymmetry"
    assert set(rep.witness) == {(0, 1, 2), (2, 1, 0)}


def test_single_triple_fails_totality():
    rep = verify_circular_axioms(TernaryRelationTable(4, frozenset({(0, 1, 2)})))
    assert rep.axiom == "Totality"
    assert rep.witness == (0, 1, 3)
    assert str(rep) == "axioms: fail Totality witness (0, 1, 3)"


def test_transitivity_failure_is_witnessed():
    # reverse the orientation of {0,1,2} inside C_4: still total and asymmetric
    R = set(C(4).to_table().triples)
    R -= {(0, 1, 2), (1, 2, 0), (2, 0, 1)}
    R |= {(2, 1, 0), (1, 0, 2), (0, 2, 1)}
    rep = verify_circular_axioms(TernaryRelationTable(4, frozenset(R)))
    assert rep.axiom == "Transitivity"
    assert oracles.witness_is_valid("Transitivity", rep.witness, R)


def test_malformed_triple():
    with pytest.raises(MalformedTriple):
        verify_circular_axioms(TernaryRelationTable(3, frozenset({(0, 0, 1)})))
    with pytest.raises(MalformedTriple):
        verify_circular_axioms(TernaryRelationTable(3, frozenset({(0, 1, 5)})))


@pytest.mark.parametrize("n", range(0, 8))
def test_axioms_exhaustive(n):
    assert verify_circular_axioms(C(n).to_table())
    X = C(n)
    for c, a, x, b in permutations(range(n), 4):
        if X.bracket(c, a, x) and X.bracket(c, x, b):
            assert X.bracket(a, x, b)


def test_order_from_relation_round_trip():
    X = FiniteCircularOrder(["d", "a", "c", "b"])
    table = X.to_table()
    back = order_from_relation(table, list(X.elements))
    assert back == X


# --- bracket and cuts -------------------------------------------------------


def test_bracket_examples():
    X = C(5)
    assert X.bracket(1, 3, 4)
    assert not X.bracket(3, 1, 4)
    assert X.bracket(3, 4, 0)


def test_bracket_errors():
    with pytest.raises(NotDistinct):
        C(5).bracket(1, 1, 2)
    with pytest.raises(UnknownElement):
        C(5).bracket(1, 2, 9)


def test_rotation_invariant_equality():
    assert FiniteCircularOrder([2, 3, 0, 1]) == C(4)
    assert FiniteCircularOrder([0, 2, 1, 3]) != C(4)


def test_cut_at_examples():
    assert cut_at(C(4), 2).order.elements == (2, 3, 0, 1)
    assert cut_at(C(3), 0).order.elements == (0, 1, 2)


@pytest.mark.parametrize("n", range(1, 8))
def test_cut_round_trip(n):
    X = C(n)
    for z in X.elements:
        assert circ_from_linear(cut_at(X, z).order) == X


def test_circ_from_linear_small():
    X = circ_from_linear(FiniteLinearOrder.standard(3))
    assert X.bracket(0, 1, 2)
    assert circ_from_linear(FiniteLinearOrder([7])).relation() == frozenset()
    assert circ_from_linear(FiniteLinearOrder([1, 2])).relation() == frozenset()
    assert verify_circular_axioms(circ_from_linear(FiniteLinearOrder([1, 2])).to_table())


def test_invalid_cut_rejected():
    with pytest.raises(ValueError):
        Cut(C(4), FiniteLinearOrder([0, 2, 1, 3]))


def test_classify_cut():
    assert classify_cut(cut_at(C(5), 3)) == PointCut(3)
    with pytest.raises(EmptyHost):
        classify_cut(Cut(C(0), FiniteLinearOrder([])))


@pytest.mark.parametrize("n", range(1, 7))
def test_linear_interval_equals_circular_interval(n):
    X = C(n)
    for cut in enumerate_cuts(X):
        L = cut.order
        for a, b in combinations(L.elements, 2):
            assert set(L.interval(a, b)) == set(X.arc(a, b))


# --- intervals and convex sets ---------------------------------------------


def test_intersect_examples():
    r = intersect_intervals(C(8), (0, 5), (3, 1))
    assert r.members() == {4}
    assert [(c.a, c.b) for c in r.components] == [(3, 5)]
    assert intersect_intervals(C(8), (0, 4), (4, 0)).members() == frozenset()
    r = intersect_intervals(C(12), (0, 6), (4, 2))
    assert r.case == "d"
    assert [(c.a, c.b) for c in r.components] == [(0, 2), (4, 6)]


def test_intersect_rejects_degenerate():
    with pytest.raises(EndpointsEqual):
        intersect_intervals(C(5), (1, 1), (0, 2))


@pytest.mark.parametrize("n", [3, 5, 8])
def test_intersect_matches_oracle(n):
    X = C(n)
    for a1, b1, a2, b2 in permutations(range(n), 4):
        r = intersect_intervals(X, (a1, b1), (a2, b2))
        want = oracles.interval_members(X, a1, b1) & oracles.interval_members(X, a2, b2)
        assert r.members() == want


def test_is_convex_examples():
    X = C(6)
    assert is_convex(X, {1, 2, 3})
    nf = ConvexSet.from_subset(X, {1, 2, 3})
    assert (nf.tag, nf.a, nf.b, nf.left_closed, nf.right_closed) == ("interval", 1, 3, True, True)
    assert not is_convex(X, {0, 3})
    nf = ConvexSet.from_subset(X, set(range(6)) - {2})
    assert nf.tag == "full_minus_point" and nf.a == 2


def test_from_subset_rejects_nonconvex():
    with pytest.raises(NotConvex):
        ConvexSet.from_subset(C(6), {0, 3})


def test_open_interval_equal_endpoints_rejected():
    with pytest.raises(EndpointsEqual):
        ConvexSet.open(C(4), 1, 1)
    assert ConvexSet.closed(C(4), 1, 1).members() == {1}


@pytest.mark.parametrize("n", range(0, 8))
def test_convex_oracle_and_complement(n):
    X = C(n)
    for k in range(n + 1):
        for S in combinations(range(n), k):
            conv = is_convex(X, S)
            assert conv == oracles.is_convex_by_definition(X, S)
            if conv:
                c = ConvexSet.from_subset(X, S)
                assert c.members() == frozenset(S)
                assert c.complement().members() == frozenset(range(n)) - set(S)


def test_three_convex_position_examples():
    assert three_convex_position(C(9), {0, 1}, {3}, {6, 7}) == "ABC"
    assert three_convex_position(C(3), {0}, {1}, {2}) == "ABC"
    assert three_convex_position(C(9), {0, 1}, {6, 7}, {3}) == "ACB"
    with pytest.raises(NotDisjoint):
        three_convex_position(C(9), {0, 1}, {1}, {3})
    with pytest.raises(NotConvex):
        three_convex_position(C(9), {0, 2}, {4}, {6})


def test_openness_via_singletons():
    X = C(6)
    for a, b, c in permutations(range(6), 3):
        if X.bracket(a, b, c):
            assert three_convex_position(X, {a}, {b}, {c}) == "ABC"


def test_is_cycle_examples():
    X = C(6)
    assert is_cycle(X, (0, 2, 4))
    assert not is_cycle(X, (0, 4, 2))
    assert is_cycle(X, (1, 1, 3, 5))


# --- properties -------------------------------------------------------------


@st.composite
def circular_orders(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    perm = draw(st.permutations(list(range(n))))
    return FiniteCircularOrder(perm)


@given(circular_orders())
def test_any_order_satisfies_axioms(X):
    table = X.to_table()
    assert verify_circular_axioms(table)
    assert order_from_relation(table, list(X.elements)) == X


@given(circular_orders(), st.data())
def test_arc_membership_matches_bracket(X, data):
    if len(X) < 2:
        return
    a, b = data.draw(st.lists(st.sampled_from(X.elements), min_size=2, max_size=2, unique=True))
    assert set(X.arc(a, b)) == oracles.interval_members(X, a, b)
    assert set(X.arc(a, b, True, True)) == oracles.interval_members(X, a, b) | {a, b}
