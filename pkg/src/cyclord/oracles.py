"""Brute-force reference implementations used to cross-check the fast paths.

Every function here follows a definition literally and is only meant for
small inputs.
"""
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product

from .orders import FiniteCircularOrder, is_cycle

AXIOMS = ("Asymmetry", "Totality", "Cyclicity", "Transitivity")


def violated_axioms(n, triples) -> set:
    """Names of the circular-order axioms that fail for a raw relation."""
    R = set(triples)
    bad = set()
    for a, b, c in permutations(range(n), 3):
        t = (a, b, c) in R
        if t and (c, b, a) in R:
            bad.add("Asymmetry")
        if not t and (a, c, b) not in R:
            bad.add("Totality")
        if t and (b, c, a) not in R:
            bad.add("Cyclicity")
        if t:
            for d in range(n):
                if d in (a, b, c):
                    continue
                if (a, c, d) in R and (a, b, d) not in R:
                    bad.add("Transitivity")
    return bad


def witness_is_valid(axiom, witness, triples) -> bool:
    """Whether ``witness`` really exhibits a failure of ``axiom``."""
    R = set(triples)
    if axiom == "Asymmetry":
        (a, b, c), rev = witness
        return (a, b, c) in R and rev == (c, b, a) and rev in R
    if axiom == "Totality":
        a, b, c = witness
        return len({a, b, c}) == 3 and (a, b, c) not in R and (a, c, b) not in R
    if axiom == "Cyclicity":
        (a, b, c), rot = witness
        return (a, b, c) in R and rot == (b, c, a) and rot not in R
    if axiom == "Transitivity":
        (a, b, c), (a2, c2, d), (a3, b3, d3) = witness
        return (
            a == a2 == a3 and c == c2 and b == b3 and d == d3
            and (a, b, c) in R and (a, c, d) in R and (a, b, d) not in R
        )
    return False


def interval_members(order: FiniteCircularOrder, a, b) -> frozenset:
    """``(a, b)`` straight from the bracket."""
    return frozenset(x for x in order.elements if x not in (a, b) and order.bracket(a, x, b))


def is_convex_by_definition(order, subset) -> bool:
    s = set(subset)
    for a, b in combinations(s, 2):
        ab = {x for x in order.elements if x in (a, b) or order.bracket(a, x, b)}
        ba = {x for x in order.elements if x in (a, b) or order.bracket(b, x, a)}
        if not (ab <= s or ba <= s):
            return False
    return True


def sup_over_chains(f) -> Fraction:
    """Linear variation as a supremum over every subchain."""
    pts = f.domain.elements
    best = Fraction(0)
    for k in range(2, len(pts) + 1):
        for idx in combinations(range(len(pts)), k):
            vals = [f.values[pts[i]] for i in idx]
            s = sum((f.dist(vals[i], vals[i + 1]) for i in range(k - 1)), Fraction(0))
            best = max(best, s)
    return best


def sup_over_cycles(f, max_len=None, injective_only=True) -> Fraction:
    """Circular variation as a supremum over cycles.

    Injective cycles are the subsets in cyclic order.  With
    ``injective_only=False`` every cycle of length up to ``max_len`` is
    generated from the definition, repeats included.
    """
    X = f.domain
    pts = X.elements
    best = Fraction(0)

    def closed_sum(vals):
        return sum((f.dist(vals[i], vals[(i + 1) % len(vals)]) for i in range(len(vals))), Fraction(0))

    if injective_only:
        for k in range(1, len(pts) + 1):
            for idx in combinations(range(len(pts)), k):
                best = max(best, closed_sum([f.values[pts[i]] for i in idx]))
        return best
    max_len = max_len or len(pts)
    for k in range(1, max_len + 1):
        for tup in product(pts, repeat=k):
            if is_cycle(X, tup):
                best = max(best, closed_sum([f.values[x] for x in tup]))
    return best


def minimal_piece_count(f, eps) -> int:
    """Fewest consecutive pieces with internal variation at most ``eps``."""
    pts = f.domain.elements
    vals = [f.values[x] for x in pts]
    n = len(vals)

    @lru_cache(maxsize=None)
    def best(i):
        if i == n:
            return 0
        out, var = None, Fraction(0)
        for j in range(i, n):
            if j > i:
                var += f.dist(vals[j - 1], vals[j])
            if var > eps:
                break
            cand = 1 + best(j + 1)
            out = cand if out is None else min(out, cand)
        return out

    return best(0)


def is_determining(p, family, C) -> bool:
    return all(q == p or any(q.table[x] != p.table[x] for x in C) for q in family)


def circular_isomorphic(o1, o2) -> bool:
    """Whether some bijection carries the brackets of ``o1`` onto ``o2``
    (full permutation search; tiny inputs only)."""
    if len(o1) != len(o2):
        return False
    e1 = o1.elements
    for perm in permutations(o2.elements):
        phi = dict(zip(e1, perm))
        if all(o1.bracket(a, b, c) == o2.bracket(phi[a], phi[b], phi[c]) for a, b, c in permutations(e1, 3)):
            return True
    return False
