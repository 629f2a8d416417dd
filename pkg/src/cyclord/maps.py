"""Order-preserving maps between finite circular and linear orders."""
from dataclasses import dataclass
from itertools import combinations, product
from typing import Optional

from .errors import BudgetExceeded, DomainMismatch, InputError, NotValidated
from .orders import (
    ConvexSet,
    FiniteCircularOrder,
    FiniteLinearOrder,
    circ_from_linear,
    is_convex,
    is_cycle,
)

__all__ = [
    "OrderMap",
    "MapFamily",
    "CopReport",
    "validate_cop",
    "validate_cop_via_cycles",
    "cop1_suffices",
    "preimage_convex",
    "validate_lop",
    "validated_cop",
    "validated_lop",
    "compose",
    "pointwise_limit",
    "is_pointwise_limit_closed",
    "minimal_determining_set",
    "circularize",
]

COP = "cop"
LOP = "lop"


class OrderMap:
    """A total map ``domain -> codomain`` given by a lookup table.

    ``validated`` is ``None`` (unchecked), ``"cop"`` or ``"lop"``; it is set by
    :func:`validated_cop` / :func:`validated_lop` or inherited by
    :func:`compose`, never trusted from user input without a check.
    """

    def __init__(self, domain, codomain, table, validated: Optional[str] = None):
        table = dict(table)
        if set(table) != set(domain.elements):
            missing = [x for x in domain.elements if x not in table]
            raise DomainMismatch(f"table is not total on the domain (missing {missing!r})")
        for x, y in table.items():
            if y not in codomain:
                raise DomainMismatch(f"{x!r} maps to {y!r}, outside the codomain")
        if validated not in (None, COP, LOP):
            raise InputError(f"unknown validation state {validated!r}")
        self.domain = domain
        self.codomain = codomain
        self.table = table
        self.validated = validated

    @classmethod
    def from_function(cls, domain, codomain, fn, validated=None):
        return cls(domain, codomain, {x: fn(x) for x in domain.elements}, validated)

    @classmethod
    def identity(cls, order):
        kind = COP if isinstance(order, FiniteCircularOrder) else LOP
        return cls(order, order, {x: x for x in order.elements}, kind)

    @classmethod
    def constant(cls, domain, codomain, value):
        return cls(domain, codomain, {x: value for x in domain.elements})

    def __call__(self, x):
        try:
            return self.table[x]
        except KeyError:
            raise DomainMismatch(f"{x!r} is not in the domain") from None

    def image(self) -> list:
        """Image points in codomain rank order."""
        vals = set(self.table.values())
        return [y for y in self.codomain.elements if y in vals]

    def fiber(self, y) -> frozenset:
        return frozenset(x for x, v in self.table.items() if v == y)

    def values(self) -> tuple:
        """Values listed in domain rank order."""
        return tuple(self.table[x] for x in self.domain.elements)

    def is_bijection(self) -> bool:
        return len(self.domain) == len(self.codomain) and len(set(self.table.values())) == len(self.domain)

    def __eq__(self, other):
        if not isinstance(other, OrderMap):
            return NotImplemented
        return self.domain == other.domain and self.codomain == other.codomain and self.table == other.table

    def __hash__(self):
        return hash((self.domain, self.codomain, frozenset(self.table.items())))

    def __repr__(self):
        return f"OrderMap({self.values()!r}, validated={self.validated!r})"


class MapFamily:
    """A finite list of maps sharing domain and codomain."""

    def __init__(self, members):
        members = list(members)
        if members:
            d, c = members[0].domain, members[0].codomain
            for m in members[1:]:
                if m.domain != d or m.codomain != c:
                    raise DomainMismatch("family members must share domain and codomain")
        self.members = members

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, f):
        return f in self.members


@dataclass(frozen=True)
class CopReport:
    ok: bool
    condition: Optional[str] = None
    witness: Optional[tuple] = None
    message: str = "cop: pass"

    def __bool__(self):
        return self.ok


def _require_circular(f):
    if not (isinstance(f.domain, FiniteCircularOrder) and isinstance(f.codomain, FiniteCircularOrder)):
        raise DomainMismatch("COP checks need circular domain and codomain")


def _require_linear(f):
    if not (isinstance(f.domain, FiniteLinearOrder) and isinstance(f.codomain, FiniteLinearOrder)):
        raise DomainMismatch("LOP checks need linear domain and codomain")


def validate_cop(f: OrderMap) -> CopReport:
    """Check (COP1) bracket preservation on distinct images, then (COP2)
    convexity of every fiber (fibers visited in codomain rank order).

    A COP1 witness is a domain triple ``(x, y, z)`` with ``[x, y, z]`` whose
    distinct images are not in bracket order.  A COP2 witness is a 4-point
    configuration ``(a, u, b, v)`` with ``a, b`` in the fiber and ``u, v``
    outside it on the two arcs between them.
    """
    _require_circular(f)
    X, Y = f.domain, f.codomain
    for x, y, z in combinations(X.elements, 3):
        if not X.bracket(x, y, z):
            x, y = y, x
        fx, fy, fz = f.table[x], f.table[y], f.table[z]
        if fx != fy and fy != fz and fx != fz and not Y.bracket(fx, fy, fz):
            return CopReport(False, "COP1", (x, y, z), f"bracket [{x},{y},{z}] not preserved")
    for y in f.image():
        fib = f.fiber(y)
        if is_convex(X, fib):
            continue
        for a, b in combinations(sorted(fib, key=X.rank), 2):
            u = next((t for t in X.arc(a, b) if t not in fib), None)
            v = next((t for t in X.arc(b, a) if t not in fib), None)
            if u is not None and v is not None:
                return CopReport(False, "COP2", (a, u, b, v), f"fiber of {y} not convex")
    return CopReport(True)


def _injective_cycles(X):
    n = len(X)
    for k in range(1, n + 1):
        for idx in combinations(range(n), k):
            yield tuple(X.elements[i] for i in idx)


def _all_cycles(X):
    n = len(X)
    for k in range(1, n + 1):
        for pts in product(X.elements, repeat=k):
            if is_cycle(X, pts):
                yield pts


def validate_cop_via_cycles(f: OrderMap, bound: int = 10, full: bool = False) -> bool:
    """Brute-force COP test from the definition: every cycle maps to a cycle.

    By default only injective cycles are enumerated (every subset in cyclic
    order); ``full=True`` also walks all non-injective cycles up to length
    ``|domain|``, which is exponential and meant for cross-checks only.
    """
    _require_circular(f)
    n = len(f.domain)
    limit = bound if not full else min(bound, 6)
    if n > limit:
        raise BudgetExceeded(f"cycle enumeration on {n} points exceeds bound {limit}")
    cycles = _all_cycles(f.domain) if full else _injective_cycles(f.domain)
    for pts in cycles:
        if not is_cycle(f.codomain, [f.table[x] for x in pts]):
            return False
    return True


def cop1_suffices(f: OrderMap) -> bool:
    """Whether the image has at least three points, in which case (COP1)
    alone already makes ``f`` COP."""
    return len(set(f.table.values())) >= 3


def validated_cop(f: OrderMap) -> OrderMap:
    report = validate_cop(f)
    if not report:
        raise InputError(f"map is not COP: {report.message}")
    return OrderMap(f.domain, f.codomain, f.table, COP)


def validate_lop(f: OrderMap) -> bool:
    _require_linear(f)
    vals = f.values()
    rank = f.codomain.rank
    return all(rank(vals[i]) <= rank(vals[i + 1]) for i in range(len(vals) - 1))


def validated_lop(f: OrderMap) -> OrderMap:
    if not validate_lop(f):
        raise InputError("map is not order preserving")
    return OrderMap(f.domain, f.codomain, f.table, LOP)


def preimage_convex(f: OrderMap, interval) -> ConvexSet:
    """Normal form of ``f^{-1}(I)`` for a validated COP map and convex ``I``."""
    if f.validated != COP:
        raise NotValidated("preimage_convex needs a validated COP map")
    members = interval.members() if isinstance(interval, ConvexSet) else frozenset(interval)
    if not is_convex(f.codomain, members):
        raise InputError("target set is not convex")
    return ConvexSet.from_subset(f.domain, [x for x in f.domain.elements if f.table[x] in members])


def compose(f: OrderMap, g: OrderMap, debug: bool = False) -> OrderMap:
    """``f o g``.  The composite keeps the shared validation kind of its
    factors; with ``debug`` it is re-validated and a disagreement raises."""
    if g.codomain != f.domain:
        raise DomainMismatch("codomain of g must equal domain of f")
    table = {x: f.table[g.table[x]] for x in g.domain.elements}
    kind = f.validated if f.validated == g.validated else None
    h = OrderMap(g.domain, f.codomain, table, kind)
    if debug and kind is not None:
        ok = validate_cop(h).ok if kind == COP else validate_lop(h)
        if not ok:
            raise AssertionError("composite of validated maps failed re-validation")
    return h


def pointwise_limit(sequence, tail: int = 1) -> OrderMap:
    """Pointwise limit of a finite sequence read as eventually constant.

    Each point must take one value on the last ``tail`` members; that value
    is the limit.
    """
    seq = list(sequence)
    if not seq or tail < 1 or tail > len(seq):
        raise InputError("need a nonempty sequence and 1 <= tail <= len(sequence)")
    MapFamily(seq)
    last = seq[-tail:]
    table = {}
    for x in seq[0].domain.elements:
        vals = {m.table[x] for m in last}
        if len(vals) != 1:
            raise InputError(f"sequence is not constant on its tail at {x!r}")
        table[x] = vals.pop()
    return OrderMap(seq[0].domain, seq[0].codomain, table)


def is_pointwise_limit_closed(family: MapFamily, candidate: OrderMap) -> bool:
    """Finite-scale membership test for the pointwise closure of COP maps.

    On a finite domain a pointwise limit is attained by a tail of the
    sequence, so the closed set of COP maps contains the candidate exactly
    when the candidate is itself COP.
    """
    if len(family) and (family.members[0].domain != candidate.domain
                        or family.members[0].codomain != candidate.codomain):
        raise DomainMismatch("candidate does not match the family")
    return validate_cop(candidate).ok


def minimal_determining_set(p: OrderMap, family: MapFamily, bound: int = 12) -> frozenset:
    """Smallest ``C`` such that every member agreeing with ``p`` on ``C`` is ``p``.

    Candidates are tried by size, then lexicographically by domain rank, so
    the first hit is deterministic.
    """
    if p not in family:
        raise InputError("p must belong to the family")
    X = p.domain
    n = len(X)
    if n > bound:
        raise BudgetExceeded(f"subset search over {n} points exceeds bound {bound}")
    others = [q for q in family if q != p]
    for k in range(n + 1):
        for idx in combinations(range(n), k):
            C = [X.elements[i] for i in idx]
            if all(any(q.table[x] != p.table[x] for x in C) for q in others):
                return frozenset(C)
    raise AssertionError("the full domain always determines p")  # pragma: no cover


def circularize(f: OrderMap) -> OrderMap:
    """The map between standard circularizations induced by a map of chains."""
    _require_linear(f)
    return OrderMap(circ_from_linear(f.domain), circ_from_linear(f.codomain), f.table)


def all_maps(domain, codomain):
    """Every map ``domain -> codomain`` (``|codomain| ** |domain|`` of them)."""
    for vals in product(codomain.elements, repeat=len(domain)):
        yield OrderMap(domain, codomain, dict(zip(domain.elements, vals)))


def rotation(order: FiniteCircularOrder, k: int) -> OrderMap:
    """The rank shift ``x -> element at rank(x) + k``, a COP automorphism."""
    n = len(order)
    els = order.elements
    return OrderMap(order, order, {x: els[(order.rank(x) + k) % n] for x in els}, COP)


__all__ += ["all_maps", "rotation"]
