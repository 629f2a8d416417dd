"""Finite circular and linear orders, cuts, cycles and convex sets.

Orders are stored as a tuple of elements in rank order.  For a circular
order the rank only fixes a starting point: two circular orders are equal
when one element list is a rotation of the other.
"""
from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations, permutations
from typing import Hashable, Iterable, NamedTuple, Optional

from .errors import (
    EmptyHost,
    EndpointsEqual,
    InputError,
    MalformedTriple,
    NotConvex,
    NotDisjoint,
    NotDistinct,
    UnknownElement,
)

__all__ = [
    "FiniteCircularOrder",
    "FiniteLinearOrder",
    "TernaryRelationTable",
    "AxiomReport",
    "Cut",
    "PointCut",
    "Gap",
    "ConvexSet",
    "IntervalIntersection",
    "verify_circular_axioms",
    "order_from_relation",
    "bracket",
    "cut_at",
    "circ_from_linear",
    "classify_cut",
    "enumerate_cuts",
    "intersect_intervals",
    "is_convex",
    "three_convex_position",
    "is_cycle",
]


class _FiniteOrder:
    __slots__ = ("elements", "_rank")

    def __init__(self, elements: Iterable[Hashable]):
        elements = tuple(elements)
        rank = {}
        for i, e in enumerate(elements):
            if e in rank:
                raise InputError(f"duplicate element {e!r}")
            rank[e] = i
        self.elements = elements
        self._rank = rank

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        try:
            return x in self._rank
        except TypeError:
            return False

    def rank(self, x) -> int:
        try:
            return self._rank[x]
        except (KeyError, TypeError):
            raise UnknownElement(f"{x!r} is not an element of the order") from None

    def _check_elements(self, *xs):
        for x in xs:
            self.rank(x)


class FiniteCircularOrder(_FiniteOrder):
    """A finite circularly ordered set.

    ``elements`` lists the points in cyclic order starting from rank 0; the
    ternary relation ``[a, b, c]`` holds when, walking forward from ``a``,
    one meets ``b`` strictly before ``c``.
    """

    __slots__ = ()
    kind = "circular"

    @classmethod
    def standard(cls, n: int) -> "FiniteCircularOrder":
        """The cyclic order ``C_n`` on ``0, ..., n-1``."""
        return cls(range(n))

    def bracket(self, a, b, c) -> bool:
        ra, rb, rc = self.rank(a), self.rank(b), self.rank(c)
        if ra == rb or rb == rc or ra == rc:
            raise NotDistinct(f"bracket needs distinct points, got {(a, b, c)!r}")
        n = len(self.elements)
        return (rb - ra) % n < (rc - ra) % n

    def successor(self, x):
        return self.elements[(self.rank(x) + 1) % len(self.elements)]

    def predecessor(self, x):
        return self.elements[(self.rank(x) - 1) % len(self.elements)]

    def rotated(self, z) -> tuple:
        """Elements in cyclic order starting at ``z``."""
        r = self.rank(z)
        return self.elements[r:] + self.elements[:r]

    def arc(self, a, b, left_closed=False, right_closed=False) -> tuple:
        """Points of the interval from ``a`` to ``b`` walking forward.

        For ``a != b`` the open part is ``{x : [a, x, b]}``; endpoint flags add
        ``a`` and/or ``b``.  For ``a == b`` only the closed ``[a, a] = {a}``
        and the open ``(a, a) = {}`` readings are used.
        """
        ra, rb = self.rank(a), self.rank(b)
        if ra == rb:
            return (a,) if (left_closed and right_closed) else ()
        n = len(self.elements)
        inner = tuple(self.elements[(ra + k) % n] for k in range(1, (rb - ra) % n))
        return ((a,) if left_closed else ()) + inner + ((b,) if right_closed else ())

    def relation(self) -> frozenset:
        """The full ternary relation as a set of element triples."""
        out = set()
        for a, b, c in permutations(self.elements, 3):
            if self.bracket(a, b, c):
                out.add((a, b, c))
        return frozenset(out)

    def to_table(self) -> "TernaryRelationTable":
        n = len(self.elements)
        triples = {
            (i, j, k)
            for i, j, k in permutations(range(n), 3)
            if (j - i) % n < (k - i) % n
        }
        return TernaryRelationTable(n, frozenset(triples))

    def __eq__(self, other):
        if not isinstance(other, FiniteCircularOrder):
            return NotImplemented
        if len(self) != len(other):
            return False
        if not self.elements:
            return True
        first = self.elements[0]
        if first not in other:
            return False
        return other.rotated(first) == self.elements

    def __hash__(self):
        return hash(("circular", frozenset(self.elements)))

    def __repr__(self):
        return f"FiniteCircularOrder({list(self.elements)!r})"


class FiniteLinearOrder(_FiniteOrder):
    """A finite chain; ``elements`` is listed from least to greatest."""

    __slots__ = ()
    kind = "linear"

    @classmethod
    def standard(cls, n: int) -> "FiniteLinearOrder":
        return cls(range(n))

    def lt(self, a, b) -> bool:
        return self.rank(a) < self.rank(b)

    def le(self, a, b) -> bool:
        return self.rank(a) <= self.rank(b)

    def interval(self, a, b, left_closed=False, right_closed=False) -> tuple:
        ra, rb = self.rank(a), self.rank(b)
        lo = ra if left_closed else ra + 1
        hi = rb + 1 if right_closed else rb
        return self.elements[lo:hi]

    def __eq__(self, other):
        if not isinstance(other, FiniteLinearOrder):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self):
        return hash(("linear", self.elements))

    def __repr__(self):
        return f"FiniteLinearOrder({list(self.elements)!r})"


# ---------------------------------------------------------------------------
# Axiom verification


@dataclass(frozen=True)
class TernaryRelationTable:
    """Raw candidate relation on ranks ``0..n-1``."""

    n: int
    triples: frozenset

    def __post_init__(self):
        object.__setattr__(self, "triples", frozenset(tuple(t) for t in self.triples))


@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    axiom: Optional[str] = None
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "axioms: pass"
        return f"axioms: fail {self.axiom} witness {self.witness}"


def _check_table(rel: TernaryRelationTable):
    for t in rel.triples:
        if len(t) != 3:
            raise MalformedTriple(f"{t!r} is not a triple")
        if any(not isinstance(v, int) or v < 0 or v >= rel.n for v in t):
            raise MalformedTriple(f"{t!r} references a rank outside 0..{rel.n - 1}")
        if len(set(t)) != 3:
            raise MalformedTriple(f"{t!r} repeats a coordinate")


def verify_circular_axioms(rel: TernaryRelationTable) -> AxiomReport:
    """Check the four circular-order axioms on a raw relation.

    Axioms are scanned in the order Asymmetry, Totality, Cyclicity,
    Transitivity, each over triples in sorted order; the first failure is
    reported with a concrete witness:

    * Asymmetry: ``((a, b, c), (c, b, a))``, both present;
    * Totality: ``(a, b, c)`` with neither it nor ``(a, c, b)`` present;
    * Cyclicity: ``((a, b, c), (b, c, a))``, the second missing;
    * Transitivity: ``((a, b, c), (a, c, d), (a, b, d))``, the last missing.
    """
    _check_table(rel)
    R = rel.triples
    ordered = sorted(R)
    for a, b, c in ordered:
        if (c, b, a) in R:
            return AxiomReport(False, "Asymmetry", ((a, b, c), (c, b, a)))
    for a, b, c in permutations(range(rel.n), 3):
        if (a, b, c) not in R and (a, c, b) not in R:
            return AxiomReport(False, "Totality", (a, b, c))
    for a, b, c in ordered:
        if (b, c, a) not in R:
            return AxiomReport(False, "Cyclicity", ((a, b, c), (b, c, a)))
    by_first = {}
    for a, b, c in ordered:
        by_first.setdefault((a, b), []).append(c)
    for a, b, c in ordered:
        for d in by_first.get((a, c), ()):
            if (a, b, d) not in R:
                return AxiomReport(False, "Transitivity", ((a, b, c), (a, c, d), (a, b, d)))
    return AxiomReport(True)


def order_from_relation(rel: TernaryRelationTable, elements=None) -> FiniteCircularOrder:
    """Convert a relation that passes the axioms into rank form."""
    report = verify_circular_axioms(rel)
    if not report:
        raise InputError(f"not a circular order: {report}")
    labels = list(range(rel.n)) if elements is None else list(elements)
    if len(labels) != rel.n:
        raise InputError("element list length does not match the relation size")
    if rel.n < 3:
        return FiniteCircularOrder(labels)
    rest = list(range(1, rel.n))

    def cmp(x, y):
        if x == y:
            return 0
        return -1 if (0, x, y) in rel.triples else 1

    rest.sort(key=cmp_to_key(cmp))
    return FiniteCircularOrder(labels[i] for i in [0] + rest)


def bracket(order: FiniteCircularOrder, a, b, c) -> bool:
    return order.bracket(a, b, c)


# ---------------------------------------------------------------------------
# Cuts


class Cut:
    """A linear order on the points of a circular order compatible with it:
    ``a < b < c`` in the linear order forces ``[a, b, c]`` in the host."""

    __slots__ = ("host", "order")

    def __init__(self, host: FiniteCircularOrder, order: FiniteLinearOrder):
        if set(host.elements) != set(order.elements):
            raise InputError("cut and host have different element sets")
        for a, b, c in combinations(order.elements, 3):
            if not host.bracket(a, b, c):
                raise InputError(f"{order!r} is not a cut: {a!r} < {b!r} < {c!r} but not [a,b,c]")
        self.host = host
        self.order = order

    def __eq__(self, other):
        if not isinstance(other, Cut):
            return NotImplemented
        return self.host == other.host and self.order == other.order

    def __hash__(self):
        return hash((self.host, self.order))

    def __repr__(self):
        return f"Cut({list(self.order.elements)!r})"


class PointCut(NamedTuple):
    point: Hashable


class Gap:
    """A cut with neither a least nor a greatest element (never finite)."""

    def __repr__(self):
        return "Gap()"

    def __eq__(self, other):
        return isinstance(other, Gap)

    def __hash__(self):
        return hash("Gap")


def cut_at(order: FiniteCircularOrder, z) -> Cut:
    """The standard point cut making ``z`` least: ``a <_z b`` iff ``[z, a, b]``."""
    return Cut(order, FiniteLinearOrder(order.rotated(z)))


def circ_from_linear(order: FiniteLinearOrder) -> FiniteCircularOrder:
    """Standard circular order of a chain: ``[x,y,z]`` iff one of the three
    cyclic shifts of ``x < y < z`` holds."""
    return FiniteCircularOrder(order.elements)


def classify_cut(cut: Cut):
    if not len(cut.host):
        raise EmptyHost("cannot classify a cut on an empty host")
    # finite chains always have a least element
    return PointCut(cut.order.elements[0])


def enumerate_cuts(host: FiniteCircularOrder, limit: int = 8) -> list:
    """Every cut on ``host`` by brute force over all linear orders."""
    if len(host) > limit:
        from .errors import BudgetExceeded

        raise BudgetExceeded(f"enumerating cuts on {len(host)} points exceeds limit {limit}")
    cuts = []
    for perm in permutations(host.elements):
        if all(host.bracket(a, b, c) for a, b, c in combinations(perm, 3)):
            cuts.append(Cut(host, FiniteLinearOrder(perm)))
    return cuts


# ---------------------------------------------------------------------------
# Convex sets

EMPTY = "empty"
FULL = "full"
FULL_MINUS_POINT = "full_minus_point"
INTERVAL = "interval"


@dataclass(frozen=True, repr=False)
class ConvexSet:
    """A convex subset of a finite circular order in one of the standard shapes.

    Use the classmethod constructors; ``from_subset`` produces the normal
    form of an arbitrary convex point set.
    """

    host: FiniteCircularOrder
    tag: str
    a: Hashable = None
    b: Hashable = None
    left_closed: bool = False
    right_closed: bool = False

    @classmethod
    def empty(cls, host):
        return cls(host, EMPTY)

    @classmethod
    def full(cls, host):
        return cls(host, FULL)

    @classmethod
    def full_minus_point(cls, host, u):
        host.rank(u)
        return cls(host, FULL_MINUS_POINT, u)

    @classmethod
    def interval(cls, host, a, b, left_closed=False, right_closed=False):
        host.rank(a)
        host.rank(b)
        if a == b and not (left_closed and right_closed):
            raise EndpointsEqual(f"interval with equal endpoints {a!r} must be closed [a,a]")
        return cls(host, INTERVAL, a, b, bool(left_closed), bool(right_closed))

    @classmethod
    def open(cls, host, a, b):
        return cls.interval(host, a, b)

    @classmethod
    def closed(cls, host, a, b):
        return cls.interval(host, a, b, True, True)

    @classmethod
    def from_subset(cls, host, subset) -> "ConvexSet":
        """Normal form of a convex subset.

        Shapes are chosen as: empty, full, ``X minus {u}`` (only when the host
        has at least three points), otherwise the closed arc ``[first, last]``.
        """
        s = set(subset)
        for x in s:
            host.rank(x)
        n = len(host)
        if not s:
            return cls.empty(host)
        if len(s) == n:
            return cls.full(host)
        if not is_convex(host, s):
            raise NotConvex(f"{sorted(s, key=host.rank)!r} is not convex")
        if len(s) == n - 1 and n >= 3:
            (u,) = set(host.elements) - s
            return cls.full_minus_point(host, u)
        start = next(x for x in host.elements if x in s and host.predecessor(x) not in s)
        x = start
        while host.successor(x) in s:
            x = host.successor(x)
        return cls.closed(host, start, x)

    @property
    def is_open_interval(self):
        return self.tag == INTERVAL and not self.left_closed and not self.right_closed

    def members(self) -> frozenset:
        if self.tag == EMPTY:
            return frozenset()
        if self.tag == FULL:
            return frozenset(self.host.elements)
        if self.tag == FULL_MINUS_POINT:
            return frozenset(self.host.elements) - {self.a}
        return frozenset(self.host.arc(self.a, self.b, self.left_closed, self.right_closed))

    def __contains__(self, x):
        if self.tag == EMPTY:
            return False
        if self.tag == FULL:
            return x in self.host
        if self.tag == FULL_MINUS_POINT:
            return x in self.host and x != self.a
        if x == self.a:
            return self.left_closed
        if x == self.b:
            return self.right_closed
        return self.host.bracket(self.a, x, self.b)

    def __len__(self):
        return len(self.members())

    def normal_form(self) -> "ConvexSet":
        return ConvexSet.from_subset(self.host, self.members())

    def complement(self) -> "ConvexSet":
        return ConvexSet.from_subset(self.host, set(self.host.elements) - self.members())

    def same_set(self, other: "ConvexSet") -> bool:
        return self.members() == other.members()

    def __repr__(self):
        return f"ConvexSet({self})"

    def __str__(self):
        if self.tag == EMPTY:
            return "{}"
        if self.tag == FULL:
            return "X"
        if self.tag == FULL_MINUS_POINT:
            return f"X\\{{{self.a}}}"
        lb = "[" if self.left_closed else "("
        rb = "]" if self.right_closed else ")"
        return f"{lb}{self.a},{self.b}{rb}"


def is_convex(order: FiniteCircularOrder, subset) -> bool:
    """For all ``a, b`` in the subset, ``[a,b]`` or ``[b,a]`` lies inside it."""
    s = set(subset)
    for x in s:
        order.rank(x)
    for a, b in combinations(s, 2):
        if not (s.issuperset(order.arc(a, b, True, True)) or s.issuperset(order.arc(b, a, True, True))):
            return False
    return True


def _as_open_interval(order, interval):
    if isinstance(interval, ConvexSet):
        if not interval.is_open_interval:
            raise InputError(f"{interval} is not an open interval")
        return interval.a, interval.b
    a, b = interval
    if a == b:
        raise EndpointsEqual(f"open interval ({a!r},{a!r}) is not allowed")
    order._check_elements(a, b)
    return a, b


@dataclass(frozen=True)
class IntervalIntersection:
    """Components of the intersection of two open intervals and the case label
    ``'a'`` .. ``'f'`` of the endpoint configuration that produced them."""

    components: tuple
    case: str

    def members(self) -> frozenset:
        out = frozenset()
        for c in self.components:
            out |= c.members()
        return out

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)


def _in_arc(order, x, a, b, lc, rc):
    if x == a:
        return lc
    if x == b:
        return rc
    return order.bracket(a, x, b)


def intersect_intervals(order: FiniteCircularOrder, i1, i2) -> IntervalIntersection:
    """Intersect two open intervals ``(a1,b1)`` and ``(a2,b2)``.

    The position of ``a2, b2`` relative to ``a1, b1`` falls into one of six
    configurations, tried in order:

    ====  ==================================  ===========================
    case  configuration                       intersection
    ====  ==================================  ===========================
    a     a2 in [b1,a1), b2 in (a2,a1]        empty
    b     a2 in (b1,a1], b2 in [b1,a2)        (a1,b1)
    c     a2 in [b1,a1], b2 in [a1,b1]        (a1,b2)
    d     a2 in (a1,b1], b2 in [a1,a2)        (a1,b2) u (a2,b1)
    e     a2 in [a1,b1), b2 in (a2,b1]        (a2,b2)
    f     a2 in [a1,b1), b2 in [b1,a1]        (a2,b1)
    ====  ==================================  ===========================

    Components that come out empty (including degenerate ``(x,x)``) are
    dropped; the rest are sorted by the rank of their left endpoint.
    """
    a1, b1 = _as_open_interval(order, i1)
    a2, b2 = _as_open_interval(order, i2)

    def inside(x, a, b, lc, rc):
        return _in_arc(order, x, a, b, lc, rc)

    if inside(a2, b1, a1, True, False) and inside(b2, a2, a1, False, True):
        case, pieces = "a", []
    elif inside(a2, b1, a1, False, True) and inside(b2, b1, a2, True, False):
        case, pieces = "b", [(a1, b1)]
    elif inside(a2, b1, a1, True, True) and inside(b2, a1, b1, True, True):
        case, pieces = "c", [(a1, b2)]
    elif inside(a2, a1, b1, False, True) and inside(b2, a1, a2, True, False):
        case, pieces = "d", [(a1, b2), (a2, b1)]
    elif inside(a2, a1, b1, True, False) and inside(b2, a2, b1, False, True):
        case, pieces = "e", [(a2, b2)]
    elif inside(a2, a1, b1, True, False) and inside(b2, b1, a1, True, True):
        case, pieces = "f", [(a2, b1)]
    else:  # pragma: no cover - the six cases are exhaustive
        raise AssertionError("unclassified interval configuration")
    comps = [
        ConvexSet.open(order, x, y)
        for x, y in pieces
        if x != y and order.arc(x, y)
    ]
    comps.sort(key=lambda c: order.rank(c.a))
    return IntervalIntersection(tuple(comps), case)


def _as_member_set(order, s):
    if isinstance(s, ConvexSet):
        return s.members()
    out = frozenset(s)
    for x in out:
        order.rank(x)
    return out


def three_convex_position(order: FiniteCircularOrder, A, B, C) -> str:
    """Orientation of three disjoint nonempty convex sets: ``'ABC'`` when
    ``[a, b, c]`` for all choices, ``'ACB'`` when ``[a, c, b]`` for all."""
    sets = [_as_member_set(order, s) for s in (A, B, C)]
    for name, s in zip("ABC", sets):
        if not s:
            raise InputError(f"{name} is empty")
        if not is_convex(order, s):
            raise NotConvex(f"{name} is not convex")
    if sets[0] & sets[1] or sets[0] & sets[2] or sets[1] & sets[2]:
        raise NotDisjoint("the three sets must be pairwise disjoint")
    a, b, c = (min(s, key=order.rank) for s in sets)
    return "ABC" if order.bracket(a, b, c) else "ACB"


def is_cycle(order: FiniteCircularOrder, pts) -> bool:
    """Whether ``pts`` is a cycle: index order carried to bracket order on
    distinct values, and every repeated value occupies a cyclic block."""
    pts = list(pts)
    if not pts:
        raise InputError("a cycle needs at least one point")
    order._check_elements(*pts)
    n = len(pts)
    for i, j, k in combinations(range(n), 3):
        x, y, z = pts[i], pts[j], pts[k]
        if x != y and y != z and x != z and not order.bracket(x, y, z):
            return False
    for i in range(n):
        for k in range(n):
            if i == k or pts[i] != pts[k]:
                continue
            fwd = all(pts[(i + s) % n] == pts[i] for s in range((k - i) % n + 1))
            bwd = all(pts[(k + s) % n] == pts[i] for s in range((i - k) % n + 1))
            if not (fwd or bwd):
                return False
    return True
