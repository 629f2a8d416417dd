"""Bounded variation on finite linear and circular orders.

All arithmetic uses :class:`fractions.Fraction`.  Values of a
:class:`SampledFunction` are rationals (distance ``|x - y|``) or points of a
:class:`RationalMetricSpace`.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import NamedTuple, Optional

from .errors import BudgetExceeded, EmptySequence, InputError, NotBoundedVariation
from .orders import FiniteCircularOrder, FiniteLinearOrder
from .split import single_split

__all__ = [
    "RationalMetricSpace",
    "SampledFunction",
    "VariationReport",
    "LiftBounds",
    "HellyResult",
    "IndependenceResult",
    "variation",
    "variation_linear",
    "variation_circular",
    "jordan_decompose",
    "lift_variation_bounds",
    "oscillation_decompose",
    "helly_select",
    "independence_depth",
    "bv_family_tame_check",
]


def _q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise InputError("floats are not accepted; pass a Fraction, int or 'p/q' string")
    try:
        return Fraction(x)
    except (TypeError, ValueError):
        raise InputError(f"{x!r} is not a rational") from None


class RationalMetricSpace:
    """A finite metric space with rational distances.

    The matrix is validated on construction: symmetric, zero exactly on the
    diagonal, triangle inequality.
    """

    def __init__(self, points, dist):
        points = list(points)
        if len(set(points)) != len(points):
            raise InputError("metric space points must be distinct")
        n = len(points)
        rows = [[_q(v) for v in row] for row in dist]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise InputError("distance matrix must be square with one row per point")
        for i in range(n):
            if rows[i][i] != 0:
                raise InputError("distance matrix must have a zero diagonal")
            for j in range(n):
                if rows[i][j] != rows[j][i]:
                    raise InputError("distance matrix must be symmetric")
                if i != j and rows[i][j] <= 0:
                    raise InputError("distinct points must have positive distance")
        for i, j, k in product(range(n), repeat=3):
            if rows[i][k] > rows[i][j] + rows[j][k]:
                raise InputError(f"triangle inequality fails at {points[i]!r},{points[j]!r},{points[k]!r}")
        self.points = points
        self.dist = rows
        self._index = {p: i for i, p in enumerate(points)}

    def d(self, p, q) -> Fraction:
        try:
            return self.dist[self._index[p]][self._index[q]]
        except KeyError:
            raise InputError(f"{p!r} or {q!r} is not a point of the space") from None

    @property
    def diameter(self) -> Fraction:
        return max((max(r) for r in self.dist), default=Fraction(0))

    def __contains__(self, p):
        return p in self._index

    def __eq__(self, other):
        if not isinstance(other, RationalMetricSpace):
            return NotImplemented
        return self.points == other.points and self.dist == other.dist

    def __repr__(self):
        return f"RationalMetricSpace({self.points!r})"


class SampledFunction:
    """A function on a finite ordered domain.

    With ``metric=None`` values are rationals; otherwise they are points of
    ``metric``.
    """

    def __init__(self, domain, values, metric: Optional[RationalMetricSpace] = None):
        values = dict(values)
        if set(values) != set(domain.elements):
            raise InputError("values must be given for exactly the domain points")
        if metric is None:
            values = {x: _q(v) for x, v in values.items()}
        else:
            for x, v in values.items():
                if v not in metric:
                    raise InputError(f"value {v!r} at {x!r} is not a metric point")
        self.domain = domain
        self.values = values
        self.metric = metric

    @classmethod
    def from_list(cls, domain, vals, metric=None):
        vals = list(vals)
        if len(vals) != len(domain):
            raise InputError("value list length must match the domain")
        return cls(domain, dict(zip(domain.elements, vals)), metric)

    def __call__(self, x):
        return self.values[x]

    def dist(self, p, q) -> Fraction:
        if self.metric is None:
            return abs(p - q)
        return self.metric.d(p, q)

    def as_list(self) -> list:
        return [self.values[x] for x in self.domain.elements]

    def range_diameter(self) -> Fraction:
        vals = set(self.values.values())
        return max((self.dist(a, b) for a in vals for b in vals), default=Fraction(0))

    def pullback(self, domain, table) -> "SampledFunction":
        """``f o q`` for a map ``q`` given as a table on ``domain``."""
        return SampledFunction(domain, {x: self.values[table[x]] for x in domain.elements}, self.metric)

    def __eq__(self, other):
        if not isinstance(other, SampledFunction):
            return NotImplemented
        return self.domain == other.domain and self.values == other.values and self.metric == other.metric

    def __repr__(self):
        return f"SampledFunction({self.as_list()!r})"


@dataclass(frozen=True)
class VariationReport:
    """Variation value and the chain or cycle whose sum attains it."""

    value: Fraction
    witness: tuple

    def __str__(self):
        return f"variation {self.value}"


def _path_sum(f, pts, closed):
    vals = [f.values[x] for x in pts]
    total = sum((f.dist(vals[i], vals[i + 1]) for i in range(len(vals) - 1)), Fraction(0))
    if closed and vals:
        total += f.dist(vals[-1], vals[0])
    return total


def variation_linear(f: SampledFunction) -> VariationReport:
    """Linear variation: the sum along the full chain.  Inserting points
    never lowers a sum (triangle inequality), so this is the supremum."""
    if not isinstance(f.domain, FiniteLinearOrder):
        raise InputError("variation_linear needs a linear domain")
    pts = f.domain.elements
    return VariationReport(_path_sum(f, pts, False), pts)


def variation_circular(f: SampledFunction) -> VariationReport:
    """Circular variation: the full cycle sum including the closing term."""
    if not isinstance(f.domain, FiniteCircularOrder):
        raise InputError("variation_circular needs a circular domain")
    pts = f.domain.elements
    return VariationReport(_path_sum(f, pts, True), pts)


def variation(f: SampledFunction) -> Fraction:
    """Linear or circular variation, chosen by the domain kind."""
    if isinstance(f.domain, FiniteCircularOrder):
        return variation_circular(f).value
    return variation_linear(f).value


def jordan_decompose(f: SampledFunction, c=None):
    """``f = u - v`` with ``u`` the cumulative variation and ``v = u - f``.

    Both parts are nondecreasing.  A circular domain is first cut open to
    the chain ``X(c)`` (``c`` defaults to the rank-0 point) and the
    decomposition is done there.
    """
    if f.metric is not None:
        raise InputError("Jordan decomposition needs rational values")
    if isinstance(f.domain, FiniteCircularOrder):
        if not len(f.domain):
            raise InputError("empty domain")
        chain, q = single_split(f.domain, f.domain.elements[0] if c is None else c)
        f = f.pullback(chain, q.table)
    pts = f.domain.elements
    u, acc = {}, Fraction(0)
    for i, x in enumerate(pts):
        if i:
            acc += abs(f.values[x] - f.values[pts[i - 1]])
        u[x] = acc
    v = {x: u[x] - f.values[x] for x in pts}
    return SampledFunction(f.domain, u), SampledFunction(f.domain, v)


class LiftBounds(NamedTuple):
    lower: Fraction
    circular: Fraction
    upper: Fraction
    ok: bool


def lift_variation_bounds(f: SampledFunction, c, diam=None) -> LiftBounds:
    """Compare the circular variation of ``f`` with the linear variation of
    ``f o q`` on the split chain ``X(c)``.

    ``diam`` defaults to the metric diameter, or for rational values to the
    diameter of the range.  ``ok`` reports
    ``lower <= circular <= lower + diam``.
    """
    if not isinstance(f.domain, FiniteCircularOrder):
        raise InputError("lift bounds need a circular domain")
    chain, q = single_split(f.domain, c)
    lifted = f.pullback(chain, q.table)
    lower = variation_linear(lifted).value
    circ = variation_circular(f).value
    if diam is None:
        diam = f.metric.diameter if f.metric is not None else f.range_diameter()
    upper = lower + _q(diam)
    return LiftBounds(lower, circ, upper, lower <= circ <= upper)


def oscillation_decompose(f: SampledFunction, epsilon) -> list:
    """Greedy left-to-right split into consecutive pieces of variation <= eps.

    A piece is closed just before the point whose jump would push its
    variation above ``eps``.  Each cut costs more than ``eps`` of total
    variation, so there are at most ``floor(V/eps) + 1`` pieces.
    """
    eps = _q(epsilon)
    if eps <= 0:
        raise InputError("epsilon must be positive")
    if not isinstance(f.domain, FiniteLinearOrder):
        raise InputError("oscillation_decompose needs a linear domain")
    pts = f.domain.elements
    if not pts:
        return []
    pieces, cur, var = [], [pts[0]], Fraction(0)
    for x in pts[1:]:
        step = f.dist(f.values[cur[-1]], f.values[x])
        if var + step > eps:
            pieces.append(tuple(cur))
            cur, var = [x], Fraction(0)
        else:
            cur.append(x)
            var += step
    pieces.append(tuple(cur))
    return pieces


# ---------------------------------------------------------------------------
# Helly selection


@dataclass
class HellyResult:
    """Selected indices with the data certifying pointwise stabilization.

    ``stage_of_pick[k]`` is the bisection stage whose index set contains the
    ``k``-th pick.  ``settle_stage[x]`` is the first stage at which the
    interval kept for ``x`` contains a single attained value, or ``None`` if
    that never happens within the horizon.  ``stable_from[x]`` is the first
    pick position from which every later pick lies at or beyond that stage.
    """

    indices: list
    stage_of_pick: list
    settle_stage: dict
    stable_from: dict
    limit: dict = field(default_factory=dict)

    def certified(self) -> bool:
        return all(k is not None for k in self.stable_from.values())


def helly_select(seq, depth: int, lo=None, hi=None, r=None, levels: int = 64) -> HellyResult:
    """Nested bisection per domain point plus a diagonal pick.

    Stages run level by level over the domain points in rank order.  At each
    stage the current interval of one point is halved and the half holding
    the majority of the surviving indices is kept (lower half on ties).
    The ``k``-th pick is the least surviving index above the previous pick,
    taken from the deepest stage that still leaves room for the remaining
    picks, so stages along the picks never decrease.
    """
    seq = list(seq)
    if not seq:
        raise EmptySequence("helly_select needs at least one function")
    if depth < 1 or depth > len(seq):
        raise InputError(f"depth must be between 1 and {len(seq)}")
    domain = seq[0].domain
    for f in seq:
        if f.domain != domain or f.metric is not None:
            raise InputError("sequence members must share a domain and take rational values")
    if r is not None:
        for i, f in enumerate(seq):
            if variation(f) > _q(r):
                raise NotBoundedVariation(f"member {i} has variation above {r}")
    allvals = [v for f in seq for v in f.values.values()]
    lo = min(allvals) if lo is None else _q(lo)
    hi = max(allvals) if hi is None else _q(hi)
    if any(v < lo or v > hi for v in allvals):
        raise InputError("values leave the declared interval")
    pts = domain.elements
    interval = {x: (lo, hi) for x in pts}
    stages = [list(range(len(seq)))]
    settle = {}

    def mark_settled():
        S = stages[-1]
        for x in pts:
            if x not in settle and len({seq[i].values[x] for i in S}) == 1:
                settle[x] = len(stages) - 1

    mark_settled()
    for _ in range(levels):
        if len(settle) == len(pts):
            break
        for x in pts:
            if x in settle:
                continue
            S = stages[-1]
            a, b = interval[x]
            mid = (a + b) / 2
            low = [i for i in S if seq[i].values[x] <= mid]
            high = [i for i in S if seq[i].values[x] > mid]
            if len(low) >= len(high):
                keep, interval[x] = low, (a, mid)
            else:
                keep, interval[x] = high, (mid, b)
            stages.append(keep)
            mark_settled()
    settle = {x: settle.get(x) for x in pts}
    picks, stage_of_pick = [None] * depth, [None] * depth
    bound, t = len(seq), len(stages) - 1
    for k in range(depth - 1, -1, -1):
        while True:
            cand = [i for i in stages[t] if k <= i < bound]
            if cand:
                break
            t -= 1
        picks[k], stage_of_pick[k] = max(cand), t
        bound = picks[k]
    stable_from = {}
    for x in pts:
        s = settle[x]
        stable_from[x] = None if s is None else next((k for k in range(depth) if stage_of_pick[k] >= s), None)
    limit = {x: seq[picks[-1]].values[x] for x in pts}
    return HellyResult(picks, stage_of_pick, settle, stable_from, limit)


# ---------------------------------------------------------------------------
# Independence and tameness


@dataclass(frozen=True)
class IndependenceResult:
    depth: int
    thresholds: Optional[tuple]
    members: tuple


def _threshold_pairs(values):
    vals = sorted(set(values))
    gaps = list(zip(vals, vals[1:]))
    for i in range(len(gaps)):
        lo, hi = gaps[i]
        yield (3 * lo + hi) / 4, (lo + 3 * hi) / 4
        for j in range(i + 1, len(gaps)):
            yield (gaps[i][0] + gaps[i][1]) / 2, (gaps[j][0] + gaps[j][1]) / 2


def _is_independent(funcs, pts, a, b):
    k = len(funcs)
    seen = set()
    for x in pts:
        pat = []
        for f in funcs:
            v = f.values[x]
            if v < a:
                pat.append(0)
            elif v > b:
                pat.append(1)
            else:
                break
        else:
            seen.add(tuple(pat))
    return len(seen) == 2 ** k


def independence_depth(family, max_depth: int = 6, budget: int = 2_000_000) -> IndependenceResult:
    """Largest ``k <= max_depth`` with an independent ``k``-subfamily.

    Independence with thresholds ``a < b``: for every split of the
    subfamily into ``P`` and ``M`` some point has ``f < a`` on ``P`` and
    ``f > b`` on ``M``.  Thresholds only matter through the gaps between
    attained values, so they are drawn from gap midpoints, or from the
    quarter points of a single gap.  Every subfamily is searched; the depth
    is reported as 1 when no independent pair exists.
    """
    family = list(family)
    if not family:
        raise EmptySequence("independence_depth needs a nonempty family")
    domain = family[0].domain
    for f in family:
        if f.domain != domain or f.metric is not None:
            raise InputError("family members must share a domain and take rational values")
    pts = domain.elements
    pairs = list(_threshold_pairs(v for f in family for v in f.values.values()))
    best = IndependenceResult(1, None, ())
    work = 0
    for k in range(2, min(max_depth, len(family)) + 1):
        found = None
        for idx in combinations(range(len(family)), k):
            funcs = [family[i] for i in idx]
            for a, b in pairs:
                work += len(pts) * k
                if work > budget:
                    raise BudgetExceeded("independence search exceeded its budget")
                if _is_independent(funcs, pts, a, b):
                    found = IndependenceResult(k, (a, b), idx)
                    break
            if found:
                break
        if not found:
            break
        best = found
    return best


def bv_family_tame_check(family, r, max_depth: int = 6, threshold: int = 2) -> bool:
    """Depth-bounded tameness test for a family of ``BV_r`` functions.

    Every member must have variation at most ``r``
    (``NotBoundedVariation`` otherwise).  The family passes when its
    independence depth does not exceed ``threshold``.
    """
    family = list(family)
    r = _q(r)
    for i, f in enumerate(family):
        v = variation(f)
        if v > r:
            raise NotBoundedVariation(f"member {i} has variation {v} > {r}")
    return independence_depth(family, max_depth).depth <= threshold
