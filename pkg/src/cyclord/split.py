"""Split spaces and lexicographic products.

Splitting a point ``a`` replaces it by two labels ``a-`` and ``a+``.  In the
circular split the interval ``(a+, a-)`` is empty, so walking the host
forward one meets ``a+`` immediately followed by ``a-``; every other point
``u`` satisfies ``[a-, u, a+]``.
"""
from dataclasses import dataclass
from itertools import permutations
from typing import Hashable, NamedTuple

from .errors import FiberMismatch, InputError, NotInvariant
from .maps import OrderMap, validate_cop
from .orders import (
    FiniteCircularOrder,
    FiniteLinearOrder,
    TernaryRelationTable,
    circ_from_linear,
)

__all__ = [
    "MINUS",
    "ZERO",
    "PLUS",
    "SplitLabel",
    "SplitSpace",
    "LexProduct",
    "single_split",
    "split_subset",
    "split_linear",
    "split_relation_by_rules",
    "verify_split_uniqueness",
    "lex_product_circular",
    "lex_product_linear",
    "lex_bracket_by_clauses",
    "induce_action_on_split",
]

MINUS = "minus"
ZERO = "zero"
PLUS = "plus"
_SUFFIX = {MINUS: "-", ZERO: "", PLUS: "+"}


class SplitLabel(NamedTuple):
    base: Hashable
    sign: str = ZERO

    def __str__(self):
        return f"{self.base}{_SUFFIX[self.sign]}"


@dataclass(frozen=True)
class SplitSpace:
    host: FiniteCircularOrder
    split_set: frozenset
    order: FiniteCircularOrder
    projection: OrderMap

    def label(self, x, sign=None) -> SplitLabel:
        if sign is None:
            sign = ZERO if x not in self.split_set else MINUS
        lab = SplitLabel(x, sign)
        self.order.rank(lab)
        return lab

    def fiber(self, x) -> tuple:
        return tuple(lab for lab in self.order.elements if lab.base == x)


def _labels_for(x, split):
    return (SplitLabel(x, PLUS), SplitLabel(x, MINUS)) if x in split else (SplitLabel(x, ZERO),)


def single_split(host: FiniteCircularOrder, c):
    """The chain ``X(c)``: ``c- < (X minus c in the order cut at c) < c+``.

    Returns the chain and the collapsing map ``q`` from its standard
    circularization onto the host.
    """
    rest = host.rotated(c)[1:]
    chain = FiniteLinearOrder(
        [SplitLabel(c, MINUS)] + [SplitLabel(x, ZERO) for x in rest] + [SplitLabel(c, PLUS)]
    )
    q = OrderMap(circ_from_linear(chain), host, {lab: lab.base for lab in chain.elements})
    return chain, q


def split_subset(host: FiniteCircularOrder, A) -> SplitSpace:
    """``Split(X; A)`` built by a rank walk; see :func:`split_relation_by_rules`
    for the independent rule-based description."""
    A = frozenset(A)
    for a in A:
        host.rank(a)
    labels = []
    for x in host.elements:
        labels.extend(_labels_for(x, A))
    if host.elements and host.elements[0] in A:
        labels = labels[1:] + labels[:1]  # start at the minus label of rank 0
    order = FiniteCircularOrder(labels)
    proj = OrderMap(order, host, {lab: lab.base for lab in labels})
    return SplitSpace(host, A, order, proj)


def split_linear(order: FiniteLinearOrder, A) -> FiniteLinearOrder:
    """Linear counterpart of :func:`split_subset`.

    Each ``a`` in ``A`` becomes ``a+ < a-`` so that the standard
    circularization of the result is exactly the circular split of the
    circularized chain.
    """
    A = frozenset(A)
    for a in A:
        order.rank(a)
    labels = []
    for x in order.elements:
        labels.extend(_labels_for(x, A))
    return FiniteLinearOrder(labels)


def split_relation_by_rules(host: FiniteCircularOrder, A):
    """Ternary relation on the split labels from the two defining rules.

    1. ``[u, w, v]`` whenever the projections are distinct and in bracket order.
    2. ``[a-, u, a+]``, ``[u, a+, a-]``, ``[a+, a-, u]`` for ``a`` in ``A`` and
       every other label ``u``.

    Returns ``(labels, table)`` with ``table`` indexed by positions in
    ``labels``.
    """
    A = frozenset(A)
    labels = []
    for x in host.elements:
        labels.extend(_labels_for(x, A))
    idx = {lab: i for i, lab in enumerate(labels)}
    triples = set()
    for u, w, v in permutations(labels, 3):
        if len({u.base, w.base, v.base}) == 3 and host.bracket(u.base, w.base, v.base):
            triples.add((idx[u], idx[w], idx[v]))
    for a in A:
        am, ap = SplitLabel(a, MINUS), SplitLabel(a, PLUS)
        for u in labels:
            if u in (am, ap):
                continue
            triples.add((idx[am], idx[u], idx[ap]))
            triples.add((idx[u], idx[ap], idx[am]))
            triples.add((idx[ap], idx[am], idx[u]))
    return labels, TernaryRelationTable(len(labels), frozenset(triples))


def verify_split_uniqueness(candidate, A) -> bool:
    """Whether ``(M, gamma)`` is isomorphic to ``Split(host; A)`` over the host.

    ``gamma`` must be a map from ``M`` onto the host with two-point fibers
    over ``A`` and singletons elsewhere (otherwise ``FiberMismatch``).  The
    search tries every rotation of ``M`` against the canonical split and
    accepts one that commutes with the projections.
    """
    M, gamma = candidate
    host = gamma.codomain
    A = frozenset(A)
    for x in host.elements:
        size = len(gamma.fiber(x))
        want = 2 if x in A else 1
        if size != want:
            raise FiberMismatch(f"fiber over {x!r} has {size} points, expected {want}")
    if gamma.domain != M:
        raise InputError("gamma must be defined on the candidate order")
    if not validate_cop(gamma):
        return False
    canon = split_subset(host, A)
    target = canon.order.elements
    src = M.elements
    N = len(src)
    for k in range(N):
        if all(gamma.table[src[i]] == canon.projection.table[target[(i + k) % N]] for i in range(N)):
            return True
    return False


@dataclass(frozen=True)
class LexProduct:
    left: object
    right: FiniteLinearOrder
    order: object

    def bracket(self, p, q, r) -> bool:
        return self.order.bracket(p, q, r)


def lex_product_circular(left, right: FiniteLinearOrder) -> LexProduct:
    """``C (x)_c L``: blocks ``{a} x L`` in the order of ``C``, each block in
    the order of ``L``.  A linear left factor gives the linear product."""
    pairs = [(a, x) for a in left.elements for x in right.elements]
    if isinstance(left, FiniteLinearOrder):
        return LexProduct(left, right, FiniteLinearOrder(pairs))
    return LexProduct(left, right, FiniteCircularOrder(pairs))


def lex_product_linear(left: FiniteLinearOrder, right: FiniteLinearOrder) -> LexProduct:
    return LexProduct(left, right, FiniteLinearOrder((a, x) for a in left.elements for x in right.elements))


def lex_bracket_by_clauses(left: FiniteCircularOrder, right: FiniteLinearOrder, p, q, r) -> bool:
    """The five-clause definition of the product bracket, evaluated directly."""
    (a, x), (b, y), (c, z) = p, q, r
    if len({p, q, r}) != 3:
        raise InputError("product bracket needs distinct points")
    lt = right.lt
    if len({a, b, c}) == 3:
        return left.bracket(a, b, c)
    if a == b != c:
        return lt(x, y)
    if b == c != a:
        return lt(y, z)
    if c == a != b:
        return lt(z, x)
    return circ_from_linear(right).bracket(x, y, z)


def induce_action_on_split(action, A, space: SplitSpace = None):
    """Lift host automorphisms to ``Split(X; A)`` by ``g(a+-) = (g a)+-``.

    Every ``g`` must map ``A`` onto itself (``NotInvariant`` otherwise).
    """
    action = list(action)
    A = frozenset(A)
    if not action:
        return []
    host = action[0].domain
    if space is None:
        space = split_subset(host, A)
    lifts = []
    for g in action:
        if g.domain != host or g.codomain != host or not g.is_bijection():
            raise InputError("action members must be bijections of the host")
        if {g.table[a] for a in A} != set(A):
            raise NotInvariant("split set is not invariant under the action")
        table = {lab: SplitLabel(g.table[lab.base], lab.sign) for lab in space.order.elements}
        lifts.append(OrderMap(space.order, space.order, table))
    return lifts
