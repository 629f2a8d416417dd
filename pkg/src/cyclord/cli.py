"""Command-line interface: ``cyclord <subcommand> ...``.

Exit status: 0 success, 1 property violation, 2 input or parse error,
3 budget exceeded.  Every JSON report records the seed and the property
checked.
"""
import argparse
import json
import os
import sys

from . import serialize as ser
from .completion import (
    build_quotient_system,
    inverse_limit_threads,
    novak_bracket,
    star_cover,
    star_refine,
)
from .errors import BudgetExceeded, CyclordError, InputError, ParseError
from .maps import validate_cop, validate_cop_via_cycles, validate_lop
from .orders import (
    ConvexSet,
    FiniteCircularOrder,
    FiniteLinearOrder,
    cut_at,
    intersect_intervals,
    is_convex,
    verify_circular_axioms,
)
from .split import lex_product_circular, split_subset
from .sturmian import (
    IrrationalAngle,
    OrbitPoint,
    compare_orbit,
    orbit_cycle,
    parse_indices,
    rotation_action,
    sturmian_code,
)
from .variation import (
    helly_select,
    independence_depth,
    jordan_decompose,
    oscillation_decompose,
    variation_circular,
    variation_linear,
)

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
GOLDEN = "[0;1,1,1,...]"


class Report:
    """Structured result of one command: a dict plus text lines."""

    def __init__(self, command, prop, ok=True, **data):
        self.data = {"command": command, "property": prop, "ok": ok, **data}
        self.lines = []
        self.dot = None

    @property
    def ok(self):
        return self.data["ok"]

    def text(self, line):
        self.lines.append(line)
        return self


# ---------------------------------------------------------------------------
# input helpers


def _read_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _host(args):
    if getattr(args, "host", None):
        order = ser.load_order(_read_json(args.host))
        if not isinstance(order, FiniteCircularOrder):
            raise InputError("host must be a circular order")
        return order
    if args.n is None:
        raise InputError("give --n or --host")
    if args.n < 0:
        raise InputError("--n must be nonnegative")
    return FiniteCircularOrder.standard(args.n)


def _element(order, token):
    return ser.find_element(order, str(token).strip())


def _elements(order, text):
    if text is None or not str(text).strip():
        return []
    return [_element(order, t) for t in str(text).split(",") if t.strip()]


def _rational(text):
    return ser.parse_rational(text)


def _endpoint(text):
    """``@k`` is the orbit point ``{k alpha}`` and ``alpha`` is ``@1``;
    anything else is a rational."""
    text = text.strip()
    if text == "alpha":
        return OrbitPoint(1)
    if text.startswith("@"):
        try:
            return OrbitPoint(int(text[1:]))
        except ValueError:
            raise ParseError(f"bad orbit endpoint {text!r}") from None
    return _rational(text)


def _enc(x):
    return ser.encode_element(x)


# ---------------------------------------------------------------------------
# commands


def cmd_check_order(args):
    data = _read_json(args.file)
    if isinstance(data, dict) and "triples" in data:
        rel = ser.load_relation(data)
    else:
        rel = ser.load_order(data)
        if isinstance(rel, FiniteLinearOrder):
            rel = FiniteCircularOrder(rel.elements)
        rel = rel.to_table()
    rep = verify_circular_axioms(rel)
    out = Report("check-order", "circular-axioms", rep.ok, axiom=rep.axiom,
                 witness=None if rep.witness is None else json.loads(json.dumps(rep.witness)))
    return out.text(str(rep))


def cmd_cop_check(args):
    f = ser.load_map(_read_json(args.file))
    if args.mode == "lop":
        ok = validate_lop(f)
        out = Report("cop-check", "linear-order-preserving", bool(ok))
        return out.text("lop: pass" if ok else "lop: fail")
    rep = validate_cop(f)
    out = Report("cop-check", "circular-order-preserving", rep.ok, condition=rep.condition,
                 witness=None if rep.witness is None else [_enc(x) for x in rep.witness],
                 message=rep.message)
    if args.cycles:
        agree = validate_cop_via_cycles(f) == rep.ok
        out.data["cycleOracleAgrees"] = agree
        if not agree:
            out.data["ok"] = False
    out.text("cop: pass" if rep.ok else f"cop: fail {rep.condition} {rep.message}")
    return out


def cmd_intersect(args):
    X = _host(args)
    a1, b1, a2, b2 = (_element(X, t) for t in args.endpoints)
    res = intersect_intervals(X, (a1, b1), (a2, b2))
    comps = [str(c) for c in res.components]
    out = Report("intersect", "interval-intersection", True, case=res.case,
                 components=[ser.to_jsonable(c) for c in res.components],
                 members=[_enc(x) for x in X.elements if x in res.members()])
    return out.text(f"case {res.case}: " + (" u ".join(comps) if comps else "empty"))


def cmd_convex(args):
    X = _host(args)
    S = _elements(X, args.subset)
    if not is_convex(X, S):
        return Report("convex", "convexity", False, subset=[_enc(x) for x in S]).text("not convex")
    c = ConvexSet.from_subset(X, S)
    out = Report("convex", "convexity", True, normalForm=ser.to_jsonable(c))
    out.text(f"convex: {c}")
    if args.complement:
        comp = c.complement()
        out.data["complement"] = ser.to_jsonable(comp)
        out.text(f"complement: {comp}")
    return out


def cmd_split(args):
    X = _host(args)
    A = _elements(X, args.points)
    S = split_subset(X, A)
    out = Report("split", "split-space", True, split=ser.to_jsonable(S))
    out.text(" ".join(str(lab) for lab in S.order.elements))
    out.dot = ser.order_to_dot(S.order, "split")
    return out


def cmd_lexprod(args):
    left = FiniteLinearOrder.standard(args.n) if args.linear else FiniteCircularOrder.standard(args.n)
    P = lex_product_circular(left, FiniteLinearOrder.standard(args.m))
    out = Report("lexprod", "lexicographic-product", True, order=ser.to_jsonable(P.order))
    out.text(" ".join(f"({a},{x})" for a, x in P.order.elements))
    out.dot = ser.order_to_dot(P.order, "lexprod")
    return out


def cmd_starcover(args):
    X = _host(args)
    F = _elements(X, args.cycle)
    cov = star_cover(X, F)
    members = [[_enc(x) for x in X.elements if x in m] for m in cov.members]
    out = Report("starcover", "star-covers", cov.covers(), cycle=[_enc(x) for x in cov.cycle], members=members)
    out.text(f"cover of {len(members)} sets: " + " | ".join(",".join(map(str, m)) for m in members))
    if args.refine:
        Fs = star_refine(X, F)
        out.data["refinement"] = [_enc(x) for x in Fs]
        out.text("star refinement: " + ",".join(map(str, Fs)))
    return out


def cmd_novak_compare(args):
    if args.cuts:
        data = _read_json(args.cuts)
        if not isinstance(data, list) or len(data) != 3:
            raise ParseError("expected a list of three cuts")
        cuts = [ser.load_cut(d) for d in data]
        host = None
    else:
        host = _host(args)
        if len(args.points) != 3:
            raise InputError("give three points or --cuts")
        pts = [_element(host, t) for t in args.points]
        cuts = [cut_at(host, p) for p in pts]
    res = novak_bracket(*cuts)
    out = Report("novak-compare", "novak-comparator", True, holds=res.holds,
                 witness=None if res.witness is None else json.loads(json.dumps(res.witness, default=str)))
    if host is not None:
        agree = host.bracket(*pts) == res.holds
        out.data["hostBracket"] = host.bracket(*pts)
        out.data["ok"] = agree
    return out.text(f"bracket: {'holds' if res.holds else 'fails'}")


def cmd_invlimit(args):
    X = _host(args)
    supports = [_elements(X, part) for part in args.supports.split(";") if part.strip()]
    system = build_quotient_system(X, supports, check=False)
    problems = system.verify()
    if problems:
        return Report("invlimit", "inverse-limits", False, problems=problems).text("; ".join(problems))
    lim = inverse_limit_threads(system, require_cofinal=args.cofinal)
    iso = lim.embedding.is_bijection() and bool(validate_cop(lim.embedding))
    out = Report(
        "invlimit", "inverse-limits", True,
        supports=[[_enc(x) for x in F] for F in system.supports],
        quotientSizes=[len(system.quotients[F]) for F in system.supports],
        threads=len(lim.threads),
        hostIsomorphic=iso,
    )
    out.text(f"{len(system.supports)} supports, {len(lim.threads)} threads, "
             f"limit {'is' if iso else 'is not'} isomorphic to the host")
    out.dot = ser.quotient_system_to_dot(system)
    return out


def _function(args):
    data = _read_json(args.file)
    return ser.load_function(data)


def cmd_variation(args):
    f = _function(args)
    rep = variation_circular(f) if isinstance(f.domain, FiniteCircularOrder) else variation_linear(f)
    out = Report("variation", "bounded-variation", True, value=ser.format_rational(rep.value),
                 witness=[_enc(x) for x in rep.witness])
    return out.text(f"variation {ser.format_rational(rep.value)}")


def cmd_jordan(args):
    f = _function(args)
    c = _element(f.domain, args.c) if args.c is not None else None
    u, v = jordan_decompose(f, c)
    out = Report("jordan", "jordan-decomposition", True, u=ser.to_jsonable(u), v=ser.to_jsonable(v))
    out.text("u: " + " ".join(ser.format_rational(x) for x in u.as_list()))
    return out.text("v: " + " ".join(ser.format_rational(x) for x in v.as_list()))


def cmd_oscillation(args):
    f = _function(args)
    pieces = oscillation_decompose(f, _rational(args.epsilon))
    out = Report("oscillation", "oscillation-decomposition", True,
                 pieces=[[_enc(x) for x in p] for p in pieces])
    return out.text(f"{len(pieces)} pieces: " + " | ".join(",".join(map(str, p)) for p in pieces))


def cmd_helly(args):
    seq = ser.load_sequence(_read_json(args.file))
    r = _rational(args.r) if args.r is not None else None
    lo = _rational(args.lo) if args.lo is not None else None
    hi = _rational(args.hi) if args.hi is not None else None
    h = helly_select(seq, args.depth, lo, hi, r)
    out = Report(
        "helly", "helly-selection", True,
        indices=h.indices,
        stageOfPick=h.stage_of_pick,
        stableFrom={ser.element_key(x): k for x, k in h.stable_from.items()},
        limit={ser.element_key(x): ser.format_rational(v) for x, v in h.limit.items()},
        certified=h.certified(),
    )
    return out.text("indices " + ",".join(map(str, h.indices)) + ("" if h.certified() else " (not fully certified)"))


def cmd_independence(args):
    fam = ser.load_sequence(_read_json(args.file))
    budget = _env_budget(args.budget)
    res = independence_depth(fam, args.max_depth, **({} if budget is None else {"budget": budget}))
    th = None if res.thresholds is None else [ser.format_rational(t) for t in res.thresholds]
    out = Report("independence", "independence-depth", True, depth=res.depth, thresholds=th,
                 members=list(res.members))
    return out.text(f"depth {res.depth}" + (f" at {th[0]},{th[1]}" if th else ""))


def _env_budget(value):
    if value is not None:
        if value <= 0:
            raise InputError("budget must be positive")
        return value
    env = os.environ.get("CYCLORD_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"CYCLORD_BUDGET must be an integer, got {env!r}") from None
    return None


def _split_arg(text):
    if text is None:
        return None
    return parse_indices(text) if text.strip() else []


def cmd_sturmian(args):
    alpha = IrrationalAngle.parse(args.alpha)
    budget = args.budget
    if args.action == "compare":
        c = compare_orbit(alpha, args.m, args.n, budget)
        rel = "<" if c < 0 else ">"
        out = Report("sturmian compare", "sturmian", True, alpha=str(alpha), m=args.m, n=args.n, result=c)
        return out.text(f"{{{args.m}a}} {rel} {{{args.n}a}}")
    idx = parse_indices(args.indices)
    if args.action == "cycle":
        split = _split_arg(args.split)
        cyc = orbit_cycle(alpha, idx, split, budget)
        out = Report("sturmian cycle", "sturmian", True, alpha=str(alpha),
                     order=ser.to_jsonable(cyc.order))
        out.text(" ".join(str(p) for p in cyc.order.elements))
        out.dot = ser.order_to_dot(cyc.order, "orbit")
        return out
    if args.action == "act":
        split = _split_arg(args.split)
        cyc = orbit_cycle(alpha, idx, split, budget)
        f, target = rotation_action(cyc, args.k, budget)
        rep = validate_cop(f)
        out = Report("sturmian act", "sturmian", rep.ok, alpha=str(alpha), map=ser.to_jsonable(f))
        return out.text(" ".join(f"{p}->{f(p)}" for p in cyc.order.elements))
    start, end = args.start, args.end
    if args.arc is not None:
        if args.arc.count(":") != 1:
            raise ParseError("--arc must look like START:END, e.g. 0:alpha")
        start, end = args.arc.split(":")
    code = sturmian_code(alpha, _endpoint(start), _endpoint(end), idx, budget=budget)
    word = "".join(str(code(i)) for i in idx)
    v = variation_circular(code).value
    out = Report("sturmian code", "sturmian", v <= 2, alpha=str(alpha), word=word,
                 variation=ser.format_rational(v), function=ser.to_jsonable(code))
    return out.text(f"{word} (variation {v})")


def cmd_sweep(args):
    from .sweep import run_suite

    results = run_suite(args.suite, args.n_max, args.seed)
    ok = all(r.passed for r in results)
    out = Report("sweep", "acceptance-sweep", ok, suite=args.suite, nMax=args.n_max,
                 results=[r.as_dict() for r in results])
    for r in results:
        out.text(r.line())
    return out


# ---------------------------------------------------------------------------
# parser


def _host_args(p):
    p.add_argument("--n", type=int, help="use the standard cycle C_n")
    p.add_argument("--host", help="JSON file with a circular order")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyclord", description="Finite circular orders and their maps.")
    parser.add_argument("--format", choices=("text", "json", "dot"), default="text")
    parser.add_argument("--seed", type=int, default=7, help="seed for randomized sweeps (recorded in reports)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-order", help="verify the circular-order axioms")
    p.add_argument("file", help="order or relation JSON")
    p.set_defaults(func=cmd_check_order)

    p = sub.add_parser("cop-check", help="check that a map preserves the order")
    p.add_argument("file", help="map JSON")
    p.add_argument("--mode", choices=("cop", "lop"), default="cop")
    p.add_argument("--cycles", action="store_true", help="also compare with the cycle oracle")
    p.set_defaults(func=cmd_cop_check)

    p = sub.add_parser("intersect", help="intersect open intervals (a1,b1) and (a2,b2)")
    _host_args(p)
    p.add_argument("endpoints", nargs=4, metavar="X")
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("convex", help="test convexity and print the normal form")
    _host_args(p)
    p.add_argument("subset", help="comma-separated elements")
    p.add_argument("--complement", action="store_true")
    p.set_defaults(func=cmd_convex)

    p = sub.add_parser("split", help="split a host at some points")
    _host_args(p)
    p.add_argument("--points", default="", help="comma-separated split points")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("lexprod", help="lexicographic product C_n x L_m")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--linear", action="store_true", help="linear left factor")
    p.set_defaults(func=cmd_lexprod)

    p = sub.add_parser("starcover", help="cover of a cycle and its star refinement")
    _host_args(p)
    p.add_argument("--cycle", required=True)
    p.add_argument("--refine", action="store_true")
    p.set_defaults(func=cmd_starcover)

    p = sub.add_parser("novak-compare", help="bracket of three cuts")
    _host_args(p)
    p.add_argument("points", nargs="*", help="three host points (point cuts)")
    p.add_argument("--cuts", help="JSON list of three cuts")
    p.set_defaults(func=cmd_novak_compare)

    p = sub.add_parser("invlimit", help="quotient system and inverse limit")
    _host_args(p)
    p.add_argument("--supports", required=True, help="cycles separated by ';', e.g. '0,2;0,1,2,3'")
    p.add_argument("--cofinal", action="store_true", help="require supports to reach every point")
    p.set_defaults(func=cmd_invlimit)

    for name, func, help_ in (
        ("variation", cmd_variation, "linear or circular variation"),
        ("jordan", cmd_jordan, "Jordan decomposition f = u - v"),
        ("oscillation", cmd_oscillation, "greedy epsilon-oscillation pieces"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="function JSON")
        p.set_defaults(func=func)
        if name == "jordan":
            p.add_argument("--c", help="cut point for circular domains")
        if name == "oscillation":
            p.add_argument("--epsilon", required=True)

    p = sub.add_parser("helly", help="Helly selection on a sequence of functions")
    p.add_argument("file", help="sequence JSON")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--r", help="variation bound")
    p.add_argument("--lo")
    p.add_argument("--hi")
    p.set_defaults(func=cmd_helly)

    p = sub.add_parser("independence", help="independence depth of a family")
    p.add_argument("file", help="family JSON")
    p.add_argument("--max-depth", type=int, default=6)
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_independence)

    p = sub.add_parser("sturmian", help="orbits of an irrational rotation")
    p.add_argument("action", choices=("cycle", "code", "compare", "act"))
    p.add_argument("--alpha", default=GOLDEN)
    p.add_argument("--indices", default="0..9")
    p.add_argument("--split", help="indices to split (default all; '' for none)")
    p.add_argument("--start", default="0")
    p.add_argument("--end", default="@1", help="rational, alpha, or @k for the point {k alpha}")
    p.add_argument("--arc", help="START:END shorthand, e.g. 0:alpha")
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--budget", type=int, help="maximum convergent level")
    p.set_defaults(func=cmd_sturmian)

    p = sub.add_parser("sweep", help="run the property sweeps")
    p.add_argument("--suite", default="all",
                   choices=("all", "orders", "maps", "split", "completion", "variation", "sturmian"))
    p.add_argument("--n-max", type=int, help="cap every exhaustive size bound")
    p.set_defaults(func=cmd_sweep)
    return parser


def _emit(report, fmt, seed, stream):
    report.data["seed"] = seed
    if fmt == "json":
        stream.write(json.dumps(report.data, indent=2, default=str) + "\n")
    elif fmt == "dot":
        if report.dot is None:
            raise InputError(f"{report.data['command']} has no DOT output")
        stream.write(report.dot + "\n")
    else:
        for line in report.lines:
            stream.write(line + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    if getattr(args, "n_max", None) is not None and args.n_max < 1:
        print("error: --n-max must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        report = args.func(args)
        _emit(report, args.format, args.seed, sys.stdout)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (CyclordError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK if report.ok else EXIT_VIOLATION


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
