"""Star covers from cycles, Novák cut comparison and inverse limits of
finite quotients."""
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Optional

from .errors import (
    CutsEqual,
    InputError,
    NotCofinal,
    NotDirected,
    NotInjective,
    SupportsNotClosed,
)
from .maps import OrderMap, compose, validate_cop
from .orders import (
    Cut,
    FiniteCircularOrder,
    FiniteLinearOrder,
    TernaryRelationTable,
    order_from_relation,
    verify_circular_axioms,
)

__all__ = [
    "CycleCover",
    "NovakResult",
    "QuotientSystem",
    "InverseLimit",
    "normalize_cycle",
    "star_cover",
    "star",
    "refines",
    "star_refines",
    "star_refine",
    "novak_bracket",
    "novak_bracket_bruteforce",
    "build_quotient_system",
    "inverse_limit_threads",
    "act_on_quotient_system",
    "quotient_isomorphism",
]

NEG_INF = "-inf"
POS_INF = "+inf"


def normalize_cycle(host, F) -> tuple:
    """Points of ``F`` listed in host order, starting at the lowest rank.

    For a circular host the input must already be an injective cycle (its
    cyclic order has to agree with the host); for a chain it must be strictly
    increasing.
    """
    pts = list(F)
    if len(set(pts)) != len(pts):
        raise NotInjective(f"{pts!r} repeats a point")
    for x in pts:
        host.rank(x)
    ordered = sorted(pts, key=host.rank)
    if isinstance(host, FiniteCircularOrder):
        if pts:
            r = ordered.index(pts[0])
            if pts != ordered[r:] + ordered[:r]:
                raise InputError(f"{pts!r} is not listed in the cyclic order of the host")
    elif pts != ordered:
        raise InputError(f"{pts!r} is not increasing")
    return tuple(ordered)


@dataclass(frozen=True)
class CycleCover:
    """The cover ``C_F``.

    ``labels`` names each member by its endpoints (``"-inf"``/``"+inf"`` for
    the unbounded ends of chain covers); ``members`` are the point sets.
    """

    host: object
    cycle: tuple
    labels: tuple
    members: tuple

    def covers(self) -> bool:
        return frozenset().union(*self.members) == frozenset(self.host.elements)

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)


def star_cover(host, F) -> CycleCover:
    """``C_F``.

    Circular host, ``|F| >= 3``: the open arcs ``(a_i, a_{i+2})``.  With two
    points ``{a, b}`` the cover is ``{X minus a, X minus b}``; with one point
    ``t`` it is ``{ {t}, X minus t }``.  Chain host: the intervals
    ``(a_{i-1}, a_{i+1})`` with ``a_0 = -inf`` and ``a_{n+1} = +inf``.
    Empty members are dropped.
    """
    F = normalize_cycle(host, F)
    if not F:
        raise InputError("a star cover needs at least one point")
    X = frozenset(host.elements)
    labels, members = [], []
    if isinstance(host, FiniteLinearOrder):
        ext = (NEG_INF,) + F + (POS_INF,)
        for i in range(1, len(F) + 1):
            lo, hi = ext[i - 1], ext[i + 1]
            lo_r = -1 if lo == NEG_INF else host.rank(lo)
            hi_r = len(host) if hi == POS_INF else host.rank(hi)
            labels.append((lo, hi))
            members.append(frozenset(host.elements[lo_r + 1:hi_r]))
    else:
        m = len(F)
        if m == 1:
            (t,) = F
            labels = [(t, t, "point"), (t, t, "rest")]
            members = [frozenset([t]), X - {t}]
        elif m == 2:
            a, b = F
            labels = [(a, a), (b, b)]
            members = [X - {a}, X - {b}]
        else:
            for i in range(m):
                a, b = F[i], F[(i + 2) % m]
                labels.append((a, b))
                members.append(frozenset(host.arc(a, b)))
    keep = [(lab, mem) for lab, mem in zip(labels, members) if mem]
    return CycleCover(host, F, tuple(l for l, _ in keep), tuple(mm for _, mm in keep))


def star(S, cover) -> frozenset:
    """``St(S, cover)``: union of the members meeting ``S``."""
    S = frozenset(S)
    out = frozenset()
    for m in cover.members:
        if m & S:
            out |= m
    return out


def refines(cover_a, cover_b) -> bool:
    return all(any(a <= b for b in cover_b.members) for a in cover_a.members)


def star_refines(cover_a, cover_b) -> bool:
    return all(any(star(a, cover_a) <= b for b in cover_b.members) for a in cover_a.members)


def _gaps(host, F):
    """Nonempty gaps between consecutive points of ``F`` as element tuples."""
    if isinstance(host, FiniteLinearOrder):
        ranks = [-1] + [host.rank(x) for x in F] + [len(host)]
        return [host.elements[ranks[i] + 1:ranks[i + 1]] for i in range(len(ranks) - 1)]
    m = len(F)
    if m == 1:
        return [host.rotated(F[0])[1:]]
    return [host.arc(F[i], F[(i + 1) % m]) for i in range(m)]


def _insert_midpoints(host, F):
    pts = set(F)
    for gap in _gaps(host, F):
        if gap:
            pts.add(gap[(len(gap) - 1) // 2])
    return tuple(sorted(pts, key=host.rank))


def star_refine(host, F, max_rounds: Optional[int] = None) -> tuple:
    """A cycle ``F*`` containing ``F`` whose cover star-refines ``C_F``.

    Each round inserts the rank midpoint (lower on ties) of every nonempty
    gap; rounds repeat until the star-refinement test passes.  A single
    round is not always enough (three evenly spaced points on twelve need
    two), and the process ends at the latest when every point is used.
    """
    F = normalize_cycle(host, F)
    target = star_cover(host, F)
    cur = F
    rounds = 0
    while True:
        if cur != F or len(F) == len(host):
            if star_refines(star_cover(host, cur), target):
                return cur
        nxt = _insert_midpoints(host, cur)
        if nxt == cur:  # pragma: no cover - full host always star-refines
            raise AssertionError("star refinement did not converge")
        cur = nxt
        rounds += 1
        if max_rounds is not None and rounds > max_rounds:
            raise InputError("star refinement needs more rounds than allowed")


# ---------------------------------------------------------------------------
# Novák comparison


@dataclass(frozen=True)
class NovakResult:
    holds: bool
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.holds


def novak_bracket(L1: Cut, L2: Cut, L3: Cut) -> NovakResult:
    """Decide ``[L1, L2, L3]`` in Novák's order on cuts.

    Looks for nonempty blocks with ``L1 = A+B+D``, ``L2 = B+D+A`` and
    ``L3 = D+A+B`` (ordinal sums).  The blocks must be contiguous in ``L1``,
    so only the ``O(n^2)`` splittings of ``L1`` are tried.
    """
    host = L1.host
    if L2.host != host or L3.host != host:
        raise InputError("cuts must share a host")
    if L1 == L2 or L2 == L3 or L1 == L3:
        raise CutsEqual("the three cuts must be pairwise distinct")
    s1, s2, s3 = L1.order.elements, L2.order.elements, L3.order.elements
    n = len(s1)
    for i in range(1, n - 1):
        for j in range(i + 1, n):
            A, B, D = s1[:i], s1[i:j], s1[j:]
            if s2 == B + D + A and s3 == D + A + B:
                return NovakResult(True, (A, B, D))
    return NovakResult(False)


def novak_bracket_bruteforce(L1: Cut, L2: Cut, L3: Cut) -> bool:
    """Same relation by trying every partition into three nonempty blocks
    (oracle for :func:`novak_bracket`)."""
    s1 = L1.order.elements
    r1, r2, r3 = L1.order.rank, L2.order.rank, L3.order.rank

    def before(rank, P, Q):
        return max(rank(x) for x in P) < min(rank(y) for y in Q)

    for colours in product(range(3), repeat=len(s1)):
        blocks = [[x for x, c in zip(s1, colours) if c == k] for k in range(3)]
        if not all(blocks):
            continue
        A, B, D = blocks
        if (before(r1, A, B) and before(r1, B, D)
                and before(r2, B, D) and before(r2, D, A)
                and before(r3, D, A) and before(r3, A, B)):
            return True
    return False



# ---------------------------------------------------------------------------
# Inverse limits


def _classes(host, F):
    """Classes of ``cov_F`` in cyclic order, as tuples of host elements."""
    if len(F) == 1:
        (t,) = F
        rest = host.rotated(t)[1:]
        return [(t,)] + ([rest] if rest else [])
    out = []
    m = len(F)
    for i in range(m):
        out.append((F[i],))
        gap = host.arc(F[i], F[(i + 1) % m])
        if gap:
            out.append(gap)
    return out


@dataclass
class QuotientSystem:
    """Finite quotients ``X_F`` of a host, one per support ``F``, with the
    projections ``pi_F`` and bonding maps ``f_{F2,F1}`` for ``F1 <= F2``."""

    host: FiniteCircularOrder
    supports: list
    quotients: dict
    projections: dict
    bondings: dict = field(default_factory=dict)

    def le(self, F1, F2) -> bool:
        return set(F1) <= set(F2)

    def class_of(self, F, x):
        return self.projections[F].table[x]

    def verify(self) -> list:
        """Check the system identities; returns a list of failure strings."""
        problems = []
        for F in self.supports:
            ident = self.bondings[(F, F)]
            if any(ident.table[c] != c for c in ident.domain.elements):
                problems.append(f"f_{{F,F}} is not the identity for {F}")
            if not validate_cop(self.projections[F]):
                problems.append(f"projection for {F} is not COP")
        for (F2, F1), f in self.bondings.items():
            if not validate_cop(f):
                problems.append(f"bonding {F2}->{F1} is not COP")
            if compose(f, self.projections[F2]).table != self.projections[F1].table:
                problems.append(f"bonding {F2}->{F1} does not commute with projections")
        for F1 in self.supports:
            for F2 in self.supports:
                for F3 in self.supports:
                    if self.le(F1, F2) and self.le(F2, F3):
                        lhs = self.bondings[(F3, F1)]
                        rhs = compose(self.bondings[(F2, F1)], self.bondings[(F3, F2)])
                        if lhs.table != rhs.table:
                            problems.append(f"composition fails for {F1} <= {F2} <= {F3}")
        return problems


def build_quotient_system(host: FiniteCircularOrder, supports, check: bool = True) -> QuotientSystem:
    """Quotients ``X_F`` for a support family closed under pairwise union.

    Each ``X_F`` has one point per element of ``F`` and one per nonempty open
    arc between consecutive elements; a single point ``t`` gives the two
    classes ``{t}`` and ``X minus t``.
    """
    sup = []
    for F in supports:
        nf = normalize_cycle(host, F)
        if not nf:
            raise InputError("supports must be nonempty")
        if nf not in sup:
            sup.append(nf)
    if not sup:
        raise InputError("need at least one support")
    keys = {frozenset(F) for F in sup}
    for F1, F2 in combinations(sup, 2):
        if frozenset(F1) | frozenset(F2) not in keys:
            raise NotDirected(f"union of {F1} and {F2} is not a support")
    quotients, projections = {}, {}
    for F in sup:
        classes = _classes(host, F)
        XF = FiniteCircularOrder(classes)
        quotients[F] = XF
        projections[F] = OrderMap(host, XF, {x: c for c in classes for x in c})
    bondings = {}
    for F1 in sup:
        for F2 in sup:
            if set(F1) <= set(F2):
                p1 = projections[F1].table
                bondings[(F2, F1)] = OrderMap(
                    quotients[F2], quotients[F1], {c: p1[c[0]] for c in quotients[F2].elements}
                )
    system = QuotientSystem(host, sup, quotients, projections, bondings)
    if check:
        problems = system.verify()
        if problems:  # pragma: no cover - construction guarantees these
            raise AssertionError("; ".join(problems))
    return system


@dataclass
class InverseLimit:
    """Threads of a quotient system and their circular order.

    A thread is a tuple of classes aligned with ``system.supports``.
    ``projections[F]`` maps threads to ``X_F``; ``embedding`` sends a host
    point to its thread.
    """

    system: QuotientSystem
    threads: list
    order: FiniteCircularOrder
    projections: dict
    embedding: OrderMap


def inverse_limit_threads(system: QuotientSystem, require_cofinal: bool = True) -> InverseLimit:
    """Compatible families ``(x_F)`` and the order they inherit.

    ``[a, b, c]`` holds for threads when some projection separates them and
    the images are in bracket order there.  The relation is built as a raw
    table and passed through the axiom verifier before conversion.
    """
    sup = system.supports
    top = max(sup, key=len)
    if any(not set(F) <= set(top) for F in sup):  # pragma: no cover - directedness
        raise NotDirected("support family has no largest element")
    if require_cofinal and set(top) != set(system.host.elements):
        raise NotCofinal("supports do not reach every host point")
    threads = []
    for c in system.quotients[top].elements:
        threads.append(tuple(system.bondings[(top, F)].table[c] for F in sup))
    for t in threads:
        for (F2, F1), f in system.bondings.items():
            if f.table[t[sup.index(F2)]] != t[sup.index(F1)]:  # pragma: no cover
                raise AssertionError("incompatible thread")
    index = {t: i for i, t in enumerate(threads)}
    triples = set()
    for a in threads:
        for b in threads:
            for c in threads:
                if len({a, b, c}) < 3:
                    continue
                for k, F in enumerate(sup):
                    xa, xb, xc = a[k], b[k], c[k]
                    if len({xa, xb, xc}) == 3 and system.quotients[F].bracket(xa, xb, xc):
                        triples.add((index[a], index[b], index[c]))
                        break
    rel = TernaryRelationTable(len(threads), frozenset(triples))
    report = verify_circular_axioms(rel)
    if not report:  # pragma: no cover - guaranteed for directed systems
        raise AssertionError(f"thread relation is not a circular order: {report}")
    order = order_from_relation(rel, threads)
    projections = {
        F: OrderMap(order, system.quotients[F], {t: t[k] for t in threads}) for k, F in enumerate(sup)
    }
    emb = OrderMap(
        system.host,
        order,
        {x: tuple(system.projections[F].table[x] for F in sup) for x in system.host.elements},
    )
    return InverseLimit(system, threads, order, projections, emb)


def quotient_isomorphism(system: QuotientSystem, g: OrderMap, F) -> OrderMap:
    """The relabeling ``X_F -> X_{gF}`` induced by a host automorphism."""
    F = normalize_cycle(system.host, F)
    gF = normalize_cycle(system.host, sorted({g.table[t] for t in F}, key=system.host.rank))
    if gF not in system.quotients:
        raise SupportsNotClosed(f"g maps support {F} outside the family")
    target = system.projections[gF].table
    return OrderMap(system.quotients[F], system.quotients[gF], {c: target[g.table[c[0]]] for c in system.quotients[F].elements})


def act_on_quotient_system(system: QuotientSystem, g: OrderMap, limit: InverseLimit = None) -> OrderMap:
    """Extend a host automorphism to the limit by ``(x_F) -> (x_{gF})``.

    The component of the image thread at ``gF`` is the relabeled component
    at ``F``.
    """
    if g.domain != system.host or g.codomain != system.host or not g.is_bijection():
        raise InputError("g must be a bijection of the host")
    if not validate_cop(g):
        raise InputError("g must be circular-order preserving")
    if limit is None:
        limit = inverse_limit_threads(system, require_cofinal=False)
    sup = system.supports
    isos = {F: quotient_isomorphism(system, g, F) for F in sup}
    pos = {F: k for k, F in enumerate(sup)}
    table = {}
    for t in limit.threads:
        new = [None] * len(sup)
        for F in sup:
            gF = normalize_cycle(system.host, sorted({g.table[x] for x in F}, key=system.host.rank))
            new[pos[gF]] = isos[F].table[t[pos[F]]]
        table[t] = tuple(new)
    return OrderMap(limit.order, limit.order, table)
