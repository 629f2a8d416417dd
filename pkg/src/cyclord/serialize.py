"""JSON and DOT encodings.

Rationals are written as canonical ``"p/q"`` strings (``q > 0``, reduced,
``q`` always present).  Orders are element lists in rank order.  Compound
element ids are encoded structurally: split labels as ``{"base", "sign"}``,
orbit points as ``{"index", "side"}`` and tuples as lists.
"""
import json
from fractions import Fraction

from .errors import ParseError
from .maps import OrderMap
from .orders import ConvexSet, Cut, FiniteCircularOrder, FiniteLinearOrder, TernaryRelationTable
from .split import SplitLabel, SplitSpace
from .sturmian import IrrationalAngle, OrbitPoint
from .variation import RationalMetricSpace, SampledFunction

__all__ = [
    "format_rational",
    "parse_rational",
    "encode_element",
    "decode_element",
    "dump",
    "load_order",
    "load_relation",
    "load_convex",
    "load_cut",
    "load_map",
    "load_metric",
    "load_function",
    "load_sequence",
    "load_split_space",
    "load_angle",
    "element_key",
    "find_element",
    "order_to_dot",
    "quotient_system_to_dot",
    "dumps",
]


def format_rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s) -> Fraction:
    if isinstance(s, bool):
        raise ParseError(f"{s!r} is not a rational")
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        try:
            if "." in s or "e" in s.lower():
                raise ValueError
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise ParseError(f"{s!r} is not a rational of the form 'p/q'")


def encode_element(e):
    if isinstance(e, SplitLabel):
        return {"base": encode_element(e.base), "sign": e.sign}
    if isinstance(e, OrbitPoint):
        return {"index": e.index, "side": e.side}
    if isinstance(e, (tuple, list)):
        return [encode_element(x) for x in e]
    if isinstance(e, (str, int)) and not isinstance(e, bool):
        return e
    raise ParseError(f"cannot encode element {e!r}")


def decode_element(v):
    if isinstance(v, dict):
        if set(v) == {"base", "sign"}:
            return SplitLabel(decode_element(v["base"]), v["sign"])
        if set(v) == {"index", "side"}:
            return OrbitPoint(int(v["index"]), v["side"])
        raise ParseError(f"unknown element object {v!r}")
    if isinstance(v, list):
        return tuple(decode_element(x) for x in v)
    if isinstance(v, (str, int)) and not isinstance(v, bool):
        return v
    raise ParseError(f"bad element id {v!r}")


def element_key(e) -> str:
    """String key used for elements in JSON objects (map tables, values)."""
    if isinstance(e, str):
        return e
    if isinstance(e, int):
        return str(e)
    return json.dumps(encode_element(e), separators=(",", ":"))


def find_element(order, token: str):
    """Resolve a command-line or JSON key against an order's elements."""
    for e in order.elements:
        if element_key(e) == token:
            return e
    raise ParseError(f"{token!r} is not an element of the order")


# ---------------------------------------------------------------------------
# encoders


def _order(o):
    return {"kind": o.kind, "elements": [encode_element(e) for e in o.elements]}


def _convex(c):
    d = {"host": _order(c.host), "tag": c.tag}
    if c.tag == "full_minus_point":
        d["point"] = encode_element(c.a)
    elif c.tag == "interval":
        d.update(a=encode_element(c.a), b=encode_element(c.b), leftClosed=c.left_closed, rightClosed=c.right_closed)
    return d


def _map(f):
    d = {
        "domain": _order(f.domain),
        "codomain": _order(f.codomain),
        "table": {element_key(x): encode_element(f.table[x]) for x in f.domain.elements},
    }
    if f.validated:
        d["validated"] = f.validated
    return d


def _metric(m):
    return {
        "points": [encode_element(p) for p in m.points],
        "dist": [[format_rational(v) for v in row] for row in m.dist],
    }


def _function(f):
    d = {"domain": _order(f.domain)}
    if f.metric is None:
        d["values"] = {element_key(x): format_rational(f.values[x]) for x in f.domain.elements}
    else:
        d["metric"] = _metric(f.metric)
        d["values"] = {element_key(x): encode_element(f.values[x]) for x in f.domain.elements}
    return d


def to_jsonable(obj):
    if isinstance(obj, (FiniteCircularOrder, FiniteLinearOrder)):
        return _order(obj)
    if isinstance(obj, TernaryRelationTable):
        return {"n": obj.n, "triples": sorted(list(t) for t in obj.triples)}
    if isinstance(obj, ConvexSet):
        return _convex(obj)
    if isinstance(obj, Cut):
        return {"host": _order(obj.host), "order": [encode_element(e) for e in obj.order.elements]}
    if isinstance(obj, OrderMap):
        return _map(obj)
    if isinstance(obj, RationalMetricSpace):
        return _metric(obj)
    if isinstance(obj, SampledFunction):
        return _function(obj)
    if isinstance(obj, SplitSpace):
        return {
            "host": _order(obj.host),
            "splitSet": [encode_element(a) for a in obj.host.elements if a in obj.split_set],
            "order": _order(obj.order),
            "projection": _map(obj.projection),
        }
    if isinstance(obj, IrrationalAngle):
        return str(obj)
    if isinstance(obj, Fraction):
        return format_rational(obj)
    raise ParseError(f"no JSON encoding for {type(obj).__name__}")


def dumps(obj, **kw) -> str:
    return json.dumps(to_jsonable(obj), **kw)


dump = to_jsonable


# ---------------------------------------------------------------------------
# decoders


def _need(d, *keys):
    if not isinstance(d, dict):
        raise ParseError("expected a JSON object")
    for k in keys:
        if k not in d:
            raise ParseError(f"missing field {k!r}")


def load_order(d):
    _need(d, "kind", "elements")
    els = [decode_element(e) for e in d["elements"]]
    try:
        if d["kind"] == "circular":
            return FiniteCircularOrder(els)
        if d["kind"] == "linear":
            return FiniteLinearOrder(els)
    except Exception as exc:
        raise ParseError(str(exc)) from None
    raise ParseError(f"unknown order kind {d['kind']!r}")


def load_relation(d):
    _need(d, "n", "triples")
    try:
        return TernaryRelationTable(int(d["n"]), frozenset(tuple(t) for t in d["triples"]))
    except TypeError as exc:
        raise ParseError(str(exc)) from None


def load_convex(d):
    _need(d, "host", "tag")
    host = load_order(d["host"])
    tag = d["tag"]
    if tag == "empty":
        return ConvexSet.empty(host)
    if tag == "full":
        return ConvexSet.full(host)
    if tag == "full_minus_point":
        return ConvexSet.full_minus_point(host, decode_element(d["point"]))
    if tag == "interval":
        return ConvexSet.interval(
            host, decode_element(d["a"]), decode_element(d["b"]),
            bool(d.get("leftClosed", False)), bool(d.get("rightClosed", False)),
        )
    raise ParseError(f"unknown convex tag {tag!r}")


def load_cut(d):
    _need(d, "host", "order")
    return Cut(load_order(d["host"]), FiniteLinearOrder(decode_element(e) for e in d["order"]))


def _keyed(domain, obj, decode):
    if not isinstance(obj, dict):
        raise ParseError("expected an object keyed by element ids")
    out = {}
    for k, v in obj.items():
        out[find_element(domain, k)] = decode(v)
    return out


def load_map(d):
    _need(d, "domain", "codomain", "table")
    dom, cod = load_order(d["domain"]), load_order(d["codomain"])
    table = _keyed(dom, d["table"], decode_element)
    try:
        return OrderMap(dom, cod, table, d.get("validated"))
    except Exception as exc:
        raise ParseError(str(exc)) from None


def load_metric(d):
    _need(d, "points", "dist")
    try:
        return RationalMetricSpace(
            [decode_element(p) for p in d["points"]],
            [[parse_rational(v) for v in row] for row in d["dist"]],
        )
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(str(exc)) from None


def load_function(d, domain=None):
    if domain is None:
        _need(d, "domain", "values")
        domain = load_order(d["domain"])
    metric = load_metric(d["metric"]) if "metric" in d else None
    decode = parse_rational if metric is None else decode_element
    try:
        return SampledFunction(domain, _keyed(domain, d["values"], decode), metric)
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(str(exc)) from None


def load_sequence(d):
    """``{"domain": ..., "functions": [{id: "p/q"}, ...]}`` or a list of
    function objects."""
    if isinstance(d, list):
        return [load_function(x) for x in d]
    _need(d, "domain", "functions")
    dom = load_order(d["domain"])
    return [load_function({"values": v} if "values" not in v else v, dom) for v in d["functions"]]


def load_split_space(d):
    _need(d, "host", "splitSet", "order", "projection")
    proj = load_map(d["projection"])
    return SplitSpace(
        load_order(d["host"]),
        frozenset(decode_element(a) for a in d["splitSet"]),
        load_order(d["order"]),
        proj,
    )


def load_angle(s):
    return IrrationalAngle.parse(s)


# ---------------------------------------------------------------------------
# DOT


def _q(s):
    return json.dumps(str(s))


def _name(e):
    if hasattr(e, "_fields"):
        return str(e)
    if isinstance(e, tuple):
        return "(" + ",".join(_name(x) for x in e) + ")"
    return str(e)


def order_to_dot(order, name="order") -> str:
    """Successor graph: a directed cycle for circular orders, a path for chains."""
    lines = [f"digraph {name} {{"]
    els = order.elements
    for e in els:
        lines.append(f"  {_q(_name(e))};")
    n = len(els)
    edges = range(n) if isinstance(order, FiniteCircularOrder) else range(n - 1)
    for i in edges:
        lines.append(f"  {_q(_name(els[i]))} -> {_q(_name(els[(i + 1) % n]))};")
    lines.append("}")
    return "\n".join(lines)


def quotient_system_to_dot(system) -> str:
    """One cluster per quotient; bonding maps drawn for immediate supports."""
    sup = system.supports
    lines = ["digraph quotients {", "  compound=true;"]

    def node(F, c):
        return _q(f"{_name(F)}:{_name(c)}")

    for k, F in enumerate(sup):
        lines.append(f"  subgraph cluster_{k} {{")
        lines.append(f"    label={_q(_name(F))};")
        els = system.quotients[F].elements
        for c in els:
            lines.append(f"    {node(F, c)} [label={_q(_name(c))}];")
        for i in range(len(els)):
            if len(els) > 1:
                lines.append(f"    {node(F, els[i])} -> {node(F, els[(i + 1) % len(els)])} [style=dotted];")
        lines.append("  }")
    for (F2, F1), f in system.bondings.items():
        if F1 == F2:
            continue
        between = any(
            G not in (F1, F2) and set(F1) <= set(G) <= set(F2) for G in sup
        )
        if between:
            continue
        for c in f.domain.elements:
            lines.append(f"  {node(F2, c)} -> {node(F1, f.table[c])};")
    lines.append("}")
    return "\n".join(lines)
