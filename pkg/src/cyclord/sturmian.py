"""Exact circle rotation by an irrational angle and its split orbit cycles.

Angles are continued-fraction streams.  Fractional parts ``{n alpha}`` are
never evaluated numerically: comparisons shrink rational enclosures built
from consecutive convergents until they separate.
"""
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import floor
from typing import NamedTuple, Optional

from .errors import BudgetExceeded, InputError, ParseError
from .maps import OrderMap
from .orders import FiniteCircularOrder
from .split import MINUS, PLUS, ZERO, split_subset
from .variation import SampledFunction

__all__ = [
    "IrrationalAngle",
    "OrbitPoint",
    "OrbitCycle",
    "LESS",
    "GREATER",
    "compare_orbit",
    "compare_to_rational",
    "frac_enclosure",
    "orbit_cycle",
    "rotation_action",
    "sturmian_code",
    "parse_indices",
]

LESS = -1
GREATER = 1
_SIDES = {MINUS: "minus", PLUS: "plus", ZERO: None}


class IrrationalAngle:
    """An angle in ``(0, 1)`` or beyond, given by continued-fraction terms.

    ``head`` lists ``a0, a1, ...``; afterwards the terms repeat ``period``
    forever, or come from ``rule(k)`` for the ``k``-th term.  Convergents
    ``p_k/q_k`` are cached as they are needed.
    """

    def __init__(self, head, period=None, rule=None):
        head = [int(a) for a in head]
        if not head:
            raise InputError("need at least the integer part")
        if (period is None) == (rule is None):
            raise InputError("give exactly one of period or rule (the expansion must be infinite)")
        if period is not None:
            period = [int(a) for a in period]
            if not period:
                raise InputError("empty period")
        if any(a < 1 for a in head[1:]) or (period and any(a < 1 for a in period)):
            raise InputError("partial quotients after a0 must be >= 1")
        self.head = head
        self.period = period
        self.rule = rule
        self._p = [head[0], head[0] * self.term(1) + 1]
        self._q = [1, self.term(1)]

    @classmethod
    def parse(cls, text: str) -> "IrrationalAngle":
        """Read ``[a0;a1,a2,...]`` (``...`` repeats the last term) or
        ``[a0;a1,(p1,p2)]`` with a parenthesised period."""
        s = text.strip().replace(" ", "")
        m = re.fullmatch(r"\[(-?\d+);(.*)\]", s)
        if not m:
            raise ParseError(f"cannot parse angle {text!r}")
        a0, rest = int(m.group(1)), m.group(2)
        pm = re.fullmatch(r"((?:\d+,)*)\(((?:\d+,)*\d+)\)", rest)
        try:
            if pm:
                head = [a0] + [int(t) for t in pm.group(1).split(",") if t]
                period = [int(t) for t in pm.group(2).split(",")]
                return cls(head, period=period)
            parts = rest.split(",")
            if len(parts) >= 2 and parts[-1] == "...":
                terms = [int(t) for t in parts[:-1]]
                return cls([a0] + terms[:-1], period=[terms[-1]])
        except (ValueError, InputError) as exc:
            raise ParseError(f"cannot parse angle {text!r}: {exc}") from None
        raise ParseError(f"angle {text!r} must end with '...' or a (period)")

    def term(self, k: int) -> int:
        if k < len(self.head):
            return self.head[k]
        if self.period is not None:
            return self.period[(k - len(self.head)) % len(self.period)]
        a = int(self.rule(k))
        if a < 1:
            raise InputError(f"rule produced partial quotient {a} at {k}")
        return a

    def convergent(self, k: int):
        while len(self._p) <= k:
            j = len(self._p)
            a = self.term(j)
            self._p.append(a * self._p[-1] + self._p[-2])
            self._q.append(a * self._q[-1] + self._q[-2])
        return self._p[k], self._q[k]

    def enclosure(self, k: int):
        """Open rational interval around the angle from convergents ``k, k+1``."""
        p0, q0 = self.convergent(k)
        p1, q1 = self.convergent(k + 1)
        a, b = Fraction(p0, q0), Fraction(p1, q1)
        return (a, b) if a < b else (b, a)

    def denominators(self, k: int):
        return self.convergent(k)[1], self.convergent(k + 1)[1]

    def __str__(self):
        tail = ",".join(map(str, self.head[1:]))
        if self.period is not None:
            per = ",".join(map(str, self.period))
            return f"[{self.head[0]};{tail + ',' if tail else ''}({per})]"
        return f"[{self.head[0]};{tail},...rule]"

    def __repr__(self):
        return f"IrrationalAngle({self})"


class OrbitPoint(NamedTuple):
    """``{index * alpha}``; ``side`` is ``"minus"``/``"plus"`` on split points."""

    index: int
    side: Optional[str] = None

    def __str__(self):
        return f"{self.index}{'' if self.side is None else ('-' if self.side == 'minus' else '+')}"


def _default_budget(n: int) -> int:
    env = os.environ.get("CYCLORD_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"CYCLORD_BUDGET must be an integer, got {env!r}") from None
    return None


def _budget_reached(alpha, k, n, budget):
    if budget is not None:
        return k > budget
    q0, q1 = alpha.denominators(max(k - 1, 0))
    return q0 * q1 > 4 * max(abs(n), 1) * 2 ** 64


def frac_enclosure(alpha: IrrationalAngle, n: int, k: int):
    """Open interval around ``{n alpha}`` from level ``k``, or ``None`` when
    the enclosure of ``n alpha`` still contains an integer."""
    lo, hi = alpha.enclosure(k)
    lo, hi = (n * lo, n * hi) if n >= 0 else (n * hi, n * lo)
    m = floor(lo)
    if hi > m + 1:
        return None
    if lo == m:
        return None
    return lo - m, hi - m


def compare_orbit(alpha: IrrationalAngle, m: int, n: int, budget: Optional[int] = None) -> int:
    """``LESS`` if ``{m alpha} < {n alpha}``, ``GREATER`` otherwise.

    ``budget`` caps the convergent level; by default refinement may go on
    until ``q_k q_{k+1}`` exceeds ``4 |n| 2**64`` (the environment variable
    ``CYCLORD_BUDGET`` overrides).  Running out raises ``BudgetExceeded``.
    """
    if m == n:
        raise InputError("compare_orbit needs distinct indices")
    if m == 0:
        return LESS
    if n == 0:
        return GREATER
    if budget is None:
        budget = _default_budget(max(abs(m), abs(n)))
    k = 0
    while True:
        em = frac_enclosure(alpha, m, k)
        en = frac_enclosure(alpha, n, k)
        if em is not None and en is not None:
            if em[1] <= en[0]:
                return LESS
            if en[1] <= em[0]:
                return GREATER
        k += 1
        if _budget_reached(alpha, k, max(abs(m), abs(n)), budget):
            raise BudgetExceeded(f"could not separate {{{m}a}} and {{{n}a}} within the budget")


def compare_to_rational(alpha: IrrationalAngle, n: int, r, budget: Optional[int] = None) -> int:
    """Sign of ``{n alpha} - r`` for rational ``r``; ``0`` only when ``n == 0``
    and ``r == 0``."""
    r = Fraction(r)
    if n == 0:
        return (0 > r) - (0 < r)
    if budget is None:
        budget = _default_budget(n)
    k = 0
    while True:
        e = frac_enclosure(alpha, n, k)
        if e is not None:
            if e[1] <= r:
                return LESS
            if e[0] >= r:
                return GREATER
        k += 1
        if _budget_reached(alpha, k, n, budget):
            raise BudgetExceeded(f"could not separate {{{n}a}} from {r} within the budget")


@dataclass(frozen=True)
class OrbitCycle:
    """Orbit points sorted on the circle, with the chosen indices doubled.

    ``base`` orders the plain indices; ``order`` is the split snapshot over
    :class:`OrbitPoint` labels.
    """

    alpha: IrrationalAngle
    indices: tuple
    split: frozenset
    base: FiniteCircularOrder
    order: FiniteCircularOrder

    def point(self, index: int, side: Optional[str] = None) -> OrbitPoint:
        p = OrbitPoint(index, side)
        self.order.rank(p)
        return p


def orbit_cycle(alpha: IrrationalAngle, indices, split=None, budget=None) -> OrbitCycle:
    """Circular snapshot of ``{n alpha}`` for the given indices.

    ``split`` defaults to every index; pass an empty set for the plain
    orbit.  Doubled points follow the split convention of
    :func:`cyclord.split.split_subset`.
    """
    idx = [int(i) for i in indices]
    if len(set(idx)) != len(idx):
        raise InputError("indices must be distinct")
    split = frozenset(idx) if split is None else frozenset(int(i) for i in split)
    if not split <= set(idx):
        raise InputError("split indices must be among the indices")
    ordered = sorted(idx, key=cmp_to_key(lambda a, b: compare_orbit(alpha, a, b, budget)))
    base = FiniteCircularOrder(ordered)
    sp = split_subset(base, split)
    labels = [OrbitPoint(lab.base, _SIDES[lab.sign]) for lab in sp.order.elements]
    return OrbitCycle(alpha, tuple(ordered), split, base, FiniteCircularOrder(labels))


def rotation_action(cycle: OrbitCycle, k: int, budget=None):
    """The shift ``n -> n + k`` from ``cycle`` onto the cycle of the shifted
    indices; split sides are carried along.  Returns ``(map, target)``."""
    target = orbit_cycle(
        cycle.alpha, [i + k for i in cycle.indices], [i + k for i in cycle.split], budget
    )
    table = {p: OrbitPoint(p.index + k, p.side) for p in cycle.order.elements}
    return OrderMap(cycle.order, target.order, table), target


def _endpoint_cmp(alpha, n, e, budget):
    if isinstance(e, OrbitPoint):
        if e.index == n:
            return 0
        return compare_orbit(alpha, n, e.index, budget)
    return compare_to_rational(alpha, n, e, budget)


def _endpoints_cmp(alpha, s, e, budget):
    if isinstance(s, OrbitPoint) and isinstance(e, OrbitPoint):
        return 0 if s.index == e.index else compare_orbit(alpha, s.index, e.index, budget)
    if isinstance(s, OrbitPoint):
        return compare_to_rational(alpha, s.index, e, budget)
    if isinstance(e, OrbitPoint):
        return -compare_to_rational(alpha, e.index, s, budget)
    s, e = Fraction(s), Fraction(e)
    return (s > e) - (s < e)


def _as_endpoint(e):
    if isinstance(e, OrbitPoint):
        return e
    e = Fraction(e)
    if not 0 <= e < 1:
        raise InputError("rational arc endpoints must lie in [0, 1)")
    return e


def sturmian_code(alpha: IrrationalAngle, start, end, indices, cycle: OrbitCycle = None, budget=None):
    """Indicator of the half-open arc ``[start, end)`` on the orbit points.

    Endpoints are rationals in ``[0, 1)`` or :class:`OrbitPoint` values.
    The arc runs counterclockwise from ``start``; equal endpoints give the
    empty arc.  The result lives on the unsplit orbit cycle.
    """
    start, end = _as_endpoint(start), _as_endpoint(end)
    if cycle is None:
        cycle = orbit_cycle(alpha, indices, split=(), budget=budget)
    wraps = _endpoints_cmp(alpha, start, end, budget)
    vals = {}
    for n in cycle.base.elements:
        if wraps == 0:
            vals[n] = 0
            continue
        after_start = _endpoint_cmp(alpha, n, start, budget) >= 0
        before_end = _endpoint_cmp(alpha, n, end, budget) < 0
        inside = (after_start and before_end) if wraps < 0 else (after_start or before_end)
        vals[n] = 1 if inside else 0
    return SampledFunction(cycle.base, vals)


def parse_indices(text: str) -> list:
    """``"0..9"`` (inclusive), ``"1,4,7"`` or a mix like ``"0..3,10"``."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        m = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", part)
        try:
            if m:
                a, b = int(m.group(1)), int(m.group(2))
                out.extend(range(a, b + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise ParseError(f"bad index list {text!r}") from None
    if not out:
        raise ParseError(f"empty index list {text!r}")
    return out
