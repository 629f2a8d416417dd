import json
from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from cyclord import serialize as S
from cyclord.completion import build_quotient_system
from cyclord.errors import ParseError
from cyclord.maps import rotation
from cyclord.orders import ConvexSet, FiniteCircularOrder, FiniteLinearOrder, cut_at
from cyclord.split import MINUS, SplitLabel, split_subset
from cyclord.sturmian import IrrationalAngle, OrbitPoint, orbit_cycle
from cyclord.variation import RationalMetricSpace, SampledFunction

C = FiniteCircularOrder.standard
L = FiniteLinearOrder.standard


def roundtrip(obj):
    return json.loads(json.dumps(S.dump(obj)))


def test_rational_canonical_form():
    assert S.format_rational(Q(6, -4)) == "-3/2"
    assert S.format_rational(5) == "5/1"
    assert S.parse_rational("4/6") == Q(2, 3)
    assert S.parse_rational(3) == 3


@pytest.mark.parametrize("bad", ["0.5", "1e3", 0.5, True, "1/0", "x", None])
def test_rational_rejects(bad):
    with pytest.raises(ParseError):
        S.parse_rational(bad)


@given(st.fractions())
def test_rational_roundtrip(x):
    assert S.parse_rational(S.format_rational(x)) == x


def test_order_roundtrip():
    for o in (C(5), L(3), FiniteCircularOrder(["a", "c", "b"])):
        assert S.load_order(roundtrip(o)) == o
    with pytest.raises(ParseError):
        S.load_order({"kind": "spiral", "elements": []})
    with pytest.raises(ParseError):
        S.load_order({"elements": [0]})
    with pytest.raises(ParseError):
        S.load_order({"kind": "circular", "elements": [0, 0]})


def test_relation_roundtrip():
    t = C(4).to_table()
    assert S.load_relation(roundtrip(t)) == t


def test_convex_roundtrip():
    X = C(6)
    for c in (ConvexSet.empty(X), ConvexSet.full(X), ConvexSet.full_minus_point(X, 2),
              ConvexSet.interval(X, 1, 4, True, False), ConvexSet.open(X, 5, 2)):
        back = S.load_convex(roundtrip(c))
        assert back.same_set(c) and back.tag == c.tag


def test_cut_roundtrip():
    c = cut_at(C(5), 3)
    back = S.load_cut(roundtrip(c))
    assert back.order.elements == c.order.elements


def test_map_roundtrip():
    f = rotation(C(5), 2)
    back = S.load_map(roundtrip(f))
    assert back.table == f.table and back.domain == f.domain


def test_split_elements_roundtrip():
    sp = split_subset(C(3), {0, 2})
    back = S.load_split_space(roundtrip(sp))
    assert back.order == sp.order
    assert back.projection.table == sp.projection.table
    assert S.decode_element(S.encode_element(SplitLabel(1, MINUS))) == SplitLabel(1, MINUS)


def test_orbit_points_roundtrip():
    cyc = orbit_cycle(IrrationalAngle.parse("[0;1,1,1,...]"), [0, 1, 2])
    assert S.load_order(roundtrip(cyc.order)) == cyc.order
    key = S.element_key(OrbitPoint(2, "plus"))
    assert S.find_element(cyc.order, key) == OrbitPoint(2, "plus")


def test_function_roundtrip():
    f = SampledFunction.from_list(L(3), [Q(1, 2), 0, -3])
    d = roundtrip(f)
    assert d["values"] == {"0": "1/2", "1": "0/1", "2": "-3/1"}
    assert S.load_function(d).values == f.values
    M = RationalMetricSpace("ab", [[0, Q(1, 3)], [Q(1, 3), 0]])
    g = SampledFunction(C(2), {0: "a", 1: "b"}, M)
    back = S.load_function(roundtrip(g))
    assert back.values == g.values and back.metric.dist == M.dist


def test_function_rejects_float_values():
    with pytest.raises(ParseError):
        S.load_function({"domain": {"kind": "linear", "elements": [0]}, "values": {"0": 0.5}})
    with pytest.raises(ParseError):
        S.load_function({"domain": {"kind": "linear", "elements": [0]}, "values": {"7": "1/2"}})


def test_sequence_forms():
    d = {"domain": S.dump(L(2)), "functions": [{"0": "0", "1": "1"}, {"0": "1/2", "1": "0"}]}
    seq = S.load_sequence(d)
    assert [f.as_list() for f in seq] == [[0, 1], [Q(1, 2), 0]]


def test_angle_roundtrip():
    a = IrrationalAngle.parse("[0;2,(1,3)]")
    assert str(S.load_angle(S.dump(a))) == str(a)


def test_unknown_type():
    with pytest.raises(ParseError):
        S.dump(object())


def test_order_dot():
    dot = S.order_to_dot(C(3))
    assert dot.splitlines() == [
        "digraph order {", '  "0";', '  "1";', '  "2";',
        '  "0" -> "1";', '  "1" -> "2";', '  "2" -> "0";', "}",
    ]
    assert '"1" -> "0"' not in S.order_to_dot(L(2))
    assert '"0-" -> "1"' in S.order_to_dot(split_subset(C(2), {0}).order)


def test_quotient_dot():
    sys_ = build_quotient_system(C(4), [(0, 2), (0, 1, 2, 3)])
    dot = S.quotient_system_to_dot(sys_)
    assert dot.startswith("digraph quotients {")
    assert dot.count("subgraph cluster_") == 2
    assert '"(0,1,2,3):(1)" -> "(0,2):(1)"' in dot
