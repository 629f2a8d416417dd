import random
from fractions import Fraction as Q
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from cyclord import oracles
from cyclord.errors import (
    BudgetExceeded,
    EmptySequence,
    InputError,
    NotBoundedVariation,
)
from cyclord.maps import OrderMap, all_maps, validate_cop
from cyclord.orders import FiniteCircularOrder, FiniteLinearOrder
from cyclord.sweep import random_bv_grid_function, random_metric
from cyclord.variation import (
    RationalMetricSpace,
    SampledFunction,
    bv_family_tame_check,
    helly_select,
    independence_depth,
    jordan_decompose,
    lift_variation_bounds,
    oscillation_decompose,
    variation,
    variation_circular,
    variation_linear,
)

C = FiniteCircularOrder.standard
L = FiniteLinearOrder.standard


def lin(*vals):
    return SampledFunction.from_list(L(len(vals)), vals)


def circ(*vals):
    return SampledFunction.from_list(C(len(vals)), vals)


# --- metric spaces and functions -------------------------------------------


def test_metric_validation():
    M = RationalMetricSpace("ab", [[0, 1], [1, 0]])
    assert M.diameter == 1
    with pytest.raises(InputError):
        RationalMetricSpace("abc", [[0, 1, 5], [1, 0, 1], [5, 1, 0]])
    with pytest.raises(InputError):
        RationalMetricSpace("ab", [[0, 1], [2, 0]])
    with pytest.raises(InputError):
        RationalMetricSpace("ab", [[0, 0], [0, 0]])


def test_floats_rejected():
    with pytest.raises(InputError):
        lin(0.5, 1)
    assert lin("1/2", 1).as_list() == [Q(1, 2), Q(1)]


# --- variation --------------------------------------------------------------


def test_variation_examples():
    assert variation_linear(lin(1, 0, 2)).value == 3
    assert variation_linear(lin(5, 5, 5)).value == 0
    assert variation_circular(circ(0, 1, 0, 1)).value == 4
    assert variation_circular(circ(7, 7, 7)).value == 0
    arc = SampledFunction(C(6), {x: 1 if x in (1, 2) else 0 for x in range(6)})
    assert variation_circular(arc).value == 2


def test_variation_matches_cycle_definition():
    f = circ(0, 1, 0, 1)
    assert oracles.sup_over_cycles(f, max_len=8, injective_only=False) == 4
    arc = SampledFunction(C(6), {x: 1 if x in (1, 2) else 0 for x in range(6)})
    assert oracles.sup_over_cycles(arc, max_len=6, injective_only=False) == 2


def test_variation_kind_checks():
    with pytest.raises(InputError):
        variation_linear(circ(0, 1))
    with pytest.raises(InputError):
        variation_circular(lin(0, 1))


def test_chain_sup_on_5_chains():
    rng = random.Random(2)
    for _ in range(50):
        f = lin(*(rng.randint(-5, 5) for _ in range(5)))
        assert variation_linear(f).value == oracles.sup_over_chains(f)


def test_metric_valued_variation():
    M = RationalMetricSpace(["p", "q", "r"], [[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    f = SampledFunction(C(3), {0: "p", 1: "r", 2: "q"}, M)
    assert variation_circular(f).value == 4


@pytest.mark.parametrize("n", range(1, 5))
def test_noninjective_cycles_reduce_to_injective(n):
    rng = random.Random(n)
    for _ in range(10):
        f = SampledFunction(C(n), {x: Q(rng.randint(-4, 4), rng.randint(1, 3)) for x in range(n)})
        assert oracles.sup_over_cycles(f, max_len=n + 2, injective_only=False) == variation_circular(f).value


# --- Jordan -----------------------------------------------------------------


def test_jordan_examples():
    u, v = jordan_decompose(lin(1, 0, 2))
    assert u.as_list() == [0, 1, 3] and v.as_list() == [-1, 1, 1]
    u, v = jordan_decompose(lin(0, 1, 2))
    assert u.as_list() == [0, 1, 2] and v.as_list() == [0, 0, 0]


def test_jordan_circular_goes_through_split():
    u, v = jordan_decompose(circ(0, 1, 0, 1))
    assert u.as_list() == [0, 1, 2, 3, 4]
    assert len(u.domain) == 5


def test_jordan_rejects_metric_values():
    M = RationalMetricSpace("ab", [[0, 1], [1, 0]])
    with pytest.raises(InputError):
        jordan_decompose(SampledFunction(L(2), {0: "a", 1: "b"}, M))


@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=1, max_size=8))
def test_jordan_properties(vals):
    f = lin(*vals)
    u, v = jordan_decompose(f)
    uu, vv = u.as_list(), v.as_list()
    assert all(a <= b for a, b in zip(uu, uu[1:]))
    assert all(a <= b for a, b in zip(vv, vv[1:]))
    assert [a - b for a, b in zip(uu, vv)] == f.as_list()
    assert uu[-1] == variation_linear(f).value


# --- lift bounds ------------------------------------------------------------


def test_lift_example():
    b = lift_variation_bounds(circ(0, 1, 0, 1), 0, diam=1)
    # the split chain keeps both copies 0- and 0+, so the lifted sum closes the cycle
    assert (b.lower, b.circular, b.upper, b.ok) == (4, 4, 5, True)
    b = lift_variation_bounds(circ(3, 3, 3), 1, diam=1)
    assert (b.lower, b.circular, b.ok) == (0, 0, True)


def test_lift_random_metrics():
    rng = random.Random(9)
    for _ in range(100):
        n = rng.randint(1, 8)
        M = random_metric(rng, rng.randint(2, 5))
        f = SampledFunction(C(n), {x: rng.choice(M.points) for x in range(n)}, M)
        for c in range(n):
            assert lift_variation_bounds(f, c).ok


# --- invariance properties --------------------------------------------------


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=8), st.integers(0, 7))
def test_rotation_invariance(vals, k):
    n = len(vals)
    f = circ(*vals)
    g = SampledFunction(C(n), {x: vals[(x + k) % n] for x in range(n)})
    assert variation_circular(f).value == variation_circular(g).value


def test_cop_precomposition_does_not_increase_variation():
    rng = random.Random(4)
    for m, k in [(3, 3), (4, 3), (4, 4), (5, 3)]:
        f = SampledFunction(C(k), {y: rng.randint(-3, 3) for y in range(k)})
        for g in all_maps(C(m), C(k)):
            if validate_cop(g):
                fg = f.pullback(C(m), g.table)
                assert variation(fg) <= variation(f)


def test_lipschitz_postcomposition():
    rng = random.Random(8)
    for _ in range(100):
        n = rng.randint(1, 7)
        f = SampledFunction(C(n), {x: Q(rng.randint(-6, 6), rng.randint(1, 3)) for x in range(n)})
        alpha = lambda v: abs(v) / 2 + 1  # noqa: E731
        g = SampledFunction(C(n), {x: alpha(f(x)) for x in range(n)})
        assert variation(g) <= variation(f)


# --- oscillation ------------------------------------------------------------


def test_oscillation_examples():
    assert oscillation_decompose(lin(0, 1, 0, 1, 0), 1) == [(0, 1), (2, 3), (4,)]
    assert oscillation_decompose(lin(0, 1, 0, 1, 0), 4) == [(0, 1, 2, 3, 4)]
    with pytest.raises(InputError):
        oscillation_decompose(lin(0, 1), 0)


@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=2), min_size=1, max_size=10),
       st.sampled_from([Q(1, 4), Q(1, 2), Q(1)]))
def test_oscillation_bound_and_minimality(vals, eps):
    f = lin(*vals)
    pieces = oscillation_decompose(f, eps)
    assert len(pieces) <= variation_linear(f).value // eps + 1
    assert len(pieces) == oracles.minimal_piece_count(f, eps)


# --- Helly ------------------------------------------------------------------


def test_helly_alternating():
    f, g = lin(0, 1, 1), lin(1, 0, 1)
    seq = [f if i % 2 == 0 else g for i in range(20)]
    h = helly_select(seq, 5, 0, 1, r=2)
    assert len({seq[i] is f for i in h.indices}) == 1
    assert h.certified()


def test_helly_shifted_steps():
    X = L(6)
    steps = [SampledFunction(X, {x: 1 if x >= k else 0 for x in range(6)}) for k in range(6)]
    seq = [steps[i % 6] for i in range(30)]
    h = helly_select(seq, 4, 0, 1, r=1)
    assert len({i % 6 for i in h.indices}) == 1
    assert all(i < j for i, j in zip(h.indices, h.indices[1:]))


def test_helly_errors():
    with pytest.raises(EmptySequence):
        helly_select([], 1)
    with pytest.raises(NotBoundedVariation):
        helly_select([lin(0, 1, 0, 1)], 1, r=1)
    with pytest.raises(InputError):
        helly_select([lin(0, 1)], 2)


def test_helly_random_sequences_stabilize():
    rng = random.Random(21)
    X = L(8)
    for _ in range(20):
        seq = [random_bv_grid_function(rng, X) for _ in range(30)]
        h = helly_select(seq, 8, 0, 1, r=2)
        for x, k in h.stable_from.items():
            if k is not None:
                assert len({seq[i](x) for i in h.indices[k:]}) == 1


# --- independence -----------------------------------------------------------


def bits():
    X = L(16)
    return [SampledFunction.from_list(X, [(x >> i) & 1 for x in range(16)]) for i in range(4)]


def test_independence_examples():
    res = independence_depth(bits())
    assert res.depth == 4 and res.thresholds == (Q(1, 4), Q(3, 4))
    assert independence_depth([lin(0, 1, 2), lin(0, 0, 5)]).depth == 1
    X = L(12)
    nested = [SampledFunction(X, {x: 1 if i <= x <= 11 - i else 0 for x in range(12)}) for i in range(6)]
    assert independence_depth(nested).depth == 1


def test_independence_budget():
    with pytest.raises(BudgetExceeded):
        independence_depth(bits(), budget=10)


def test_tameness_examples():
    X = C(12)
    arcs = [SampledFunction(X, {x: 1 if (x - k) % 12 < 4 else 0 for x in range(12)}) for k in range(12)]
    assert bv_family_tame_check(arcs, 2)
    with pytest.raises(NotBoundedVariation):
        bv_family_tame_check(bits(), 2)
    assert bv_family_tame_check([lin(0, 1)], 1)


def test_lop_families_have_depth_one():
    X = L(3)
    lops = [SampledFunction.from_list(X, v) for v in
            [(a, b, c) for a in range(3) for b in range(3) for c in range(3) if a <= b <= c]]
    for fam in combinations(lops, 3):
        assert independence_depth(list(fam)).depth == 1
