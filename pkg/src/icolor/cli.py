"""Command-line surface.

Exit codes: 0 success/valid/feasible, 1 invalid/infeasible/not-member,
2 usage or file error, 3 timeout/inconclusive.  ICOLOR_TIMEBOX overrides
the default solver timeboxes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import constructions as cons
from .bounds import BoundError, BoundQuery, CATALOG, bound_eval, tree_params
from .coloring import EdgeColoring, verify_interval
from .graphs import FAMILIES, GraphError, SearchGuardError, family, stats
from .io import (FileFormatError, load_coloring, load_graph, save_coloring,
                 save_graph, to_dot)
from .products import PRODUCT_KINDS, hamming, product
from .solver import (DEFAULT_DECIDE_TIMEBOX, DEFAULT_EDGE_GUARD,
                     DEFAULT_SUMMARY_TIMEBOX, Inconclusive, decide_t,
                     greatest_W, least_w, summary, theorem2_upper)
from .suite import run_suite

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_TIMEOUT = 0, 1, 2, 3


def _env_timebox(default: float) -> float:
    raw = os.environ.get("ICOLOR_TIMEBOX")
    if raw is None:
        return default
    try:
        return float(raw)
    except ValueError:
        return default


def _parse_params(raw: str | None) -> dict[str, int]:
    params: dict[str, int] = {}
    if not raw:
        return params
    for part in raw.split(","):
        if not part.strip():
            continue
        key, _, value = part.partition("=")
        if not _ or not key.strip():
            raise FileFormatError(f"bad parameter {part!r}, expected k=v")
        try:
            params[key.strip()] = int(value)
        except ValueError as exc:
            raise FileFormatError(f"parameter {key.strip()!r} needs an integer") from exc
    return params


def cmd_gen(args) -> int:
    G = family(args.family, args.n)
    if args.output:
        save_graph(G, args.output)
    else:
        json.dump({"name": G.name, "n": G.n, "edges": [list(e) for e in G.edges]},
                  sys.stdout, indent=2)
        print()
    return EXIT_OK


def cmd_product(args) -> int:
    G = load_graph(args.g)
    H = load_graph(args.h)
    P = product(args.kind, G, H)
    save_graph(P, args.output)
    print(f"{P.name}: {P.n} vertices, {P.m} edges")
    return EXIT_OK


def cmd_hamming(args) -> int:
    dims = [int(x) for x in args.dims.split(",") if x.strip()]
    G = hamming(dims)
    save_graph(G, args.output)
    print(f"{G.name}: {G.n} vertices, {G.m} edges")
    return EXIT_OK


def cmd_stats(args) -> int:
    G = load_graph(args.graph)
    st = stats(G)
    json.dump({
        "name": G.name,
        "n": G.n,
        "m": G.m,
        "degrees": list(st.degrees),
        "max_degree": st.max_degree,
        "diameter": st.diameter,
        "bipartite": st.bipartite,
        "connected": st.connected,
        "regular": st.regular,
    }, sys.stdout, indent=2)
    print()
    return EXIT_OK


def cmd_solve(args) -> int:
    G = load_graph(args.graph)
    box = args.timebox if args.timebox is not None else _env_timebox(
        DEFAULT_DECIDE_TIMEBOX if args.t is not None else DEFAULT_SUMMARY_TIMEBOX)
    guard = args.guard
    try:
        if args.t is not None:
            res = decide_t(G, args.t, timebox=box)
            if res.status == "timeout":
                print(f"timeout deciding t={args.t}")
                return EXIT_TIMEOUT
            if res.status == "infeasible":
                print(f"no interval {args.t}-coloring (search exhausted)")
                return EXIT_NEGATIVE
            if args.output:
                save_coloring(res.witness, G.name, args.output)
            print(f"interval {args.t}-coloring found")
            return EXIT_OK
        if args.w:
            value = least_w(G, timebox=box, guard=guard)
        elif args.W:
            value = greatest_W(G, timebox=box, guard=guard)
        else:
            s = summary(G, timebox=box, guard=guard)
            doc = {
                "graph": G.name,
                "member": s.member,
                "w": s.w,
                "W": s.W,
                "feasible_t": sorted(s.feasible_t),
                "certificate": s.certificate,
            }
            if s.inconclusive:
                doc["undecided_t"] = sorted(s.undecided_t)
            json.dump(doc, sys.stdout, indent=2)
            print()
            if s.inconclusive:
                return EXIT_TIMEOUT
            return EXIT_OK if s.member else EXIT_NEGATIVE
    except Inconclusive as exc:
        print(f"inconclusive: {exc}")
        return EXIT_TIMEOUT
    if value is None:
        print("not interval colorable (search range exhausted)")
        return EXIT_NEGATIVE
    print(value)
    return EXIT_OK


def cmd_verify(args) -> int:
    G = load_graph(args.graph)
    coloring, gname = load_coloring(args.coloring)
    if gname and gname != G.name:
        print(f"note: coloring file names graph {gname!r}, verifying against {G.name!r}",
              file=sys.stderr)
    try:
        verdict = verify_interval(G, coloring)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if verdict.valid:
        print(f"valid interval coloring with t={verdict.t}")
        return EXIT_OK
    for v in verdict.violations:
        print(v.describe())
    return EXIT_NEGATIVE


def cmd_construct(args) -> int:
    trace: list | None = [] if args.trace else None
    if args.op == "round_robin":
        G, c = cons.round_robin(args.n)
    elif args.op == "hypercube_max":
        G, c = cons.hypercube_max(args.n)
    elif args.op == "combine_cartesian":
        G1, a = _graph_and_coloring(args.g, args.alpha)
        G2, b = _graph_and_coloring(args.h, args.beta)
        G, c = cons.combine_cartesian(G1, a, G2, b)
    elif args.op == "double_regular":
        G1, a = _graph_and_coloring(args.g, args.alpha)
        G, c = cons.double_regular(G1, a)
    elif args.op in ("tensor", "strong_tensor", "strong", "lex"):
        G1, a = _graph_and_coloring(args.g, args.alpha)
        H = load_graph(args.h)
        beta = load_coloring(args.beta)[0] if args.beta else None
        if args.op == "tensor":
            G, c = cons.tensor_blocks(G1, a, H, trace=trace)
        elif args.op == "strong_tensor":
            G, c = cons.strong_tensor_blocks(G1, a, H, trace=trace)
        elif args.op == "strong":
            G, c = cons.strong_blocks(G1, a, H, beta=beta, trace=trace)
        else:
            G, c = cons.lex_blocks(G1, a, H, beta=beta, trace=trace)
    else:
        raise FileFormatError(f"unknown construction {args.op!r}")
    save_coloring(c, G.name, args.output)
    if args.graph_out:
        save_graph(G, args.graph_out)
    if args.trace and trace is not None:
        with open(args.trace, "w") as fh:
            json.dump([{
                "g_edge": list(p.g_edge),
                "window": list(p.window),
                "matchings": [[list(pair) for pair in mt] for mt in p.matchings],
            } for p in trace], fh, indent=2)
            fh.write("\n")
    print(f"{G.name}: interval coloring with t={c.max_color}")
    return EXIT_OK


def _graph_and_coloring(gpath, cpath):
    if not gpath or not cpath:
        raise FileFormatError("this construction needs --g/--alpha (and --h/--beta) files")
    return load_graph(gpath), load_coloring(cpath)[0]


def cmd_bounds(args) -> int:
    if args.list:
        for entry in CATALOG.values():
            params = ", ".join(entry.params)
            side = f"  [{entry.side}]" if entry.side else ""
            print(f"{entry.name:16s} ({params})  =  {entry.formula}{side}")
        return EXIT_OK
    if not args.name:
        print("error: --name or --list required", file=sys.stderr)
        return EXIT_USAGE
    value = bound_eval(BoundQuery(args.name, _parse_params(args.params)))
    print(value)
    return EXIT_OK


def cmd_tree_params(args) -> int:
    T = load_graph(args.tree)
    tp = tree_params(T)
    json.dump({
        "centers": list(tp.centers),
        "pendants": list(tp.pendants),
        "m": tp.m_T,
        "M": tp.M_T,
    }, sys.stdout, indent=2)
    print()
    return EXIT_OK


def cmd_check(args) -> int:
    box = args.timebox if args.timebox is not None else os.environ.get("ICOLOR_TIMEBOX")
    box = float(box) if box is not None else None
    report = run_suite(args.suite, timebox=box)
    for c in report.checks:
        print(f"{c.id:4s} {c.status:12s} [{c.runtime:7.2f}s] {c.observed}")
    t = report.totals
    print(f"totals: {t['pass']} pass, {t['fail']} fail, {t['inconclusive']} inconclusive")
    out = args.output or f"{args.suite}-report.json"
    with open(out, "w") as fh:
        json.dump(report.to_json(), fh, indent=2)
        fh.write("\n")
    return report.exit_code()


def cmd_export(args) -> int:
    G = load_graph(args.graph)
    coloring = load_coloring(args.coloring)[0] if args.coloring else None
    text = to_dot(G, coloring)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="icolor",
        description="Interval edge-colorings of graph products: generate, "
                    "solve, verify, construct, and check.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a named family graph")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("product", help="product of two graph files")
    p.add_argument("--kind", required=True, choices=PRODUCT_KINDS)
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(fn=cmd_product)

    p = sub.add_parser("hamming", help="cartesian product of complete graphs")
    p.add_argument("--dims", required=True, help="comma separated, e.g. 2,2,2")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(fn=cmd_hamming)

    p = sub.add_parser("stats", help="structural summary of a graph file")
    p.add_argument("graph")
    p.set_defaults(fn=cmd_stats)

    p = sub.add_parser("solve", help="interval colorability, w, W, or one t")
    p.add_argument("graph")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--w", action="store_true", help="least color count")
    group.add_argument("--W", action="store_true", help="greatest color count")
    group.add_argument("--t", type=int, help="decide one color count")
    p.add_argument("--timebox", type=float, default=None)
    p.add_argument("--guard", type=int, default=DEFAULT_EDGE_GUARD)
    p.add_argument("-o", "--output", help="witness coloring file (with --t)")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("verify", help="check a coloring file against a graph")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("construct", help="build a coloring constructively")
    p.add_argument("--op", required=True,
                   choices=["round_robin", "hypercube_max", "combine_cartesian",
                            "double_regular", "tensor", "strong_tensor", "strong", "lex"])
    p.add_argument("--n", type=int, help="parameter for round_robin/hypercube_max")
    p.add_argument("--g", help="first factor graph file")
    p.add_argument("--alpha", help="first factor coloring file")
    p.add_argument("--h", help="second factor graph file")
    p.add_argument("--beta", help="second factor coloring file")
    p.add_argument("-o", "--output", required=True, help="coloring file to write")
    p.add_argument("--graph-out", help="also write the product graph file")
    p.add_argument("--trace", help="write the block plan as JSON")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("bounds", help="evaluate a cataloged bound")
    p.add_argument("--name")
    p.add_argument("--params", help="comma separated k=v bindings")
    p.add_argument("--list", action="store_true")
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("tree-params", help="centers, pendants, and path maxima")
    p.add_argument("tree")
    p.set_defaults(fn=cmd_tree_params)

    p = sub.add_parser("check", help="run a built-in check suite")
    p.add_argument("--suite", required=True, choices=["desk", "stretch"])
    p.add_argument("--timebox", type=float, default=None)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("export", help="DOT text, optionally with edge colors")
    p.add_argument("graph")
    p.add_argument("--coloring")
    p.add_argument("--dot", action="store_true", help="accepted for clarity; DOT is the only format")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (FileFormatError, GraphError, BoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SearchGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Inconclusive as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_TIMEOUT


if __name__ == "__main__":
    sys.exit(main())
