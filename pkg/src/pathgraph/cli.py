"""Command line surface.

Exit codes: 0 member, 1 non-member, 2 input error, 3 guard refusal (or a
realization failure, which is likewise a refusal to emit an unvalidated
artifact).
"""

from __future__ import annotations

import argparse
import sys

from . import io as gio
from .attach import quotient
from .chordal import is_chordal
from .decompose import clique_separators, gamma_components
from .errors import (
    GenerationError,
    GuardRefusal,
    InputError,
    PreconditionError,
    RealizationError,
)
from .generate import gen_chordal, gen_path_graph, k4_hub
from .graphs import Graph, connected_components, graph_plus, induced_subgraph
from .obstructions import DF, F, FTILDE, W0, W1, build_family
from .oracle import oracle_clique_path_tree
from .realize import clique_path_tree_to_host, realize
from .recognize import (
    DIRECTED_PATH_GRAPH,
    NOT_CHORDAL,
    recognize_directed_path_graph,
    recognize_path_graph,
)

_FAMILIES = {"w0": W0, "w1": W1, "f": F, "ftilde": FTILDE, "df": DF}


def _read_graph(args) -> Graph:
    if args.graph == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.graph, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {args.graph}: {exc}")
    g = gio.parse_graph(text, args.format)
    if args.gplus:
        g = graph_plus(g)
    return g


def _say(args, text: str) -> None:
    if not args.quiet:
        print(text, end="" if text.endswith("\n") else "\n")


def _cmd_recognize(args) -> int:
    g = _read_graph(args)
    verdict = recognize_path_graph(g)
    directed = recognize_directed_path_graph(g)
    if args.json:
        doc = {
            "chordal": verdict.status != NOT_CHORDAL,
            "hole": None if verdict.hole is None else list(verdict.hole.cycle),
            "path_graph": verdict.is_path_graph,
            "directed_path_graph": directed.status == DIRECTED_PATH_GRAPH,
        }
        _say(args, gio.emit_verdict(doc))
    else:
        yn = lambda b: "yes" if b else "no"
        _say(args, f"chordal: {yn(verdict.status != NOT_CHORDAL)}")
        if verdict.hole is not None:
            _say(args, f"hole: {' '.join(map(str, verdict.hole.cycle))}")
        _say(args, f"path graph: {yn(verdict.is_path_graph)}")
        _say(args, f"directed path graph: {yn(directed.status == DIRECTED_PATH_GRAPH)}")
    return 0 if verdict.is_path_graph else 1


def _cmd_certify(args) -> int:
    g = _read_graph(args)
    verdict = recognize_path_graph(g)
    directed = recognize_directed_path_graph(g)
    realization = None
    if args.realize and verdict.is_path_graph:
        t = realize(g)
        host = clique_path_tree_to_host(g, t)
        realization = gio.realization_doc(t, host)
    doc = gio.verdict_document(
        g, verdict, gplus=args.gplus, directed=directed, realization=realization
    )
    _say(args, gio.emit_verdict(doc))
    return 0 if verdict.is_path_graph else 1


def _cmd_realize(args) -> int:
    g = _read_graph(args)
    try:
        t = realize(g)
    except PreconditionError:
        _say(args, "not a path graph; nothing to realize")
        return 1
    host = clique_path_tree_to_host(g, t)
    if args.dot:
        _say(args, gio.emit_dot(t, g))
    elif args.json:
        _say(args, gio.emit_verdict(gio.realization_doc(t, host)))
    else:
        lines = []
        for i, c in enumerate(t.cliques):
            lines.append(f"clique {i}: {' '.join(g.label(v) for v in c)}")
        for a, b in sorted(t.edges):
            lines.append(f"tree edge: {a} -- {b}")
        _say(args, "\n".join(lines))
    return 0


def _cmd_oracle(args) -> int:
    g = _read_graph(args)
    if not is_chordal(g):
        _say(args, "not chordal; not a path graph")
        return 1
    trees = []
    ok = True
    for comp in connected_components(g):
        sub, idmap = induced_subgraph(g, comp)
        t = oracle_clique_path_tree(sub)
        if t is None:
            ok = False
            break
        trees.append((idmap, t))
    if args.json:
        doc: dict = {"path_graph": ok}
        if ok:
            doc["trees"] = [
                gio.realization_doc(t) | {"component": list(idmap)}
                for idmap, t in trees
            ]
        _say(args, gio.emit_verdict(doc))
    else:
        _say(args, "path graph (oracle): yes" if ok else "path graph (oracle): no")
    return 0 if ok else 1


def _cmd_gen(args) -> int:
    host_doc = None
    if args.kind == "path":
        tree_nodes = args.tree_nodes if args.tree_nodes else max(2, args.n)
        g, host = gen_path_graph(tree_nodes, args.n, args.seed)
        host_doc = {
            "host_n": host.host_n,
            "host_edges": [list(e) for e in sorted(host.host_edges)],
            "paths": [list(p) for p in host.paths],
        }
    elif args.kind == "chordal":
        g = gen_chordal(args.n, args.seed)
    elif args.kind == "k4hub":
        g = k4_hub(args.n if args.n else 4)
    else:
        raise InputError(f"unknown kind {args.kind!r}")
    if args.json:
        doc = {"n": g.n, "edges": [list(e) for e in g.edges()]}
        if host_doc is not None:
            doc["host"] = host_doc
        _say(args, gio.emit_verdict(doc))
    elif args.format == "graph6":
        _say(args, gio.emit_graph6(g))
    else:
        _say(args, gio.emit_edgelist(g))
    return 0


def _cmd_attachedness(args) -> int:
    g = _read_graph(args)
    comps = connected_components(g)
    if len(comps) > 1:
        raise InputError("attachedness needs a connected graph")
    if not is_chordal(g):
        raise InputError("attachedness needs a chordal graph")
    seps = clique_separators(g)
    if not seps:
        raise InputError("graph has no clique separator (it is an atom)")
    if not 0 <= args.separator < len(seps):
        raise InputError(
            f"separator index {args.separator} out of range (have {len(seps)})"
        )
    q = seps[args.separator]
    dec = gamma_components(g, q)
    m = quotient(dec)
    if args.dot:
        _say(args, gio.emit_dot(m, g))
    elif args.json:
        doc = {
            "q": list(q),
            "classes": m.size,
            "class_members": [list(mem) for mem in m.class_members],
            "antipodal_edges": [
                [u, v] for u, v, c in m.edges.edges() if c == "antipodal"
            ],
            "dominance_pairs": [list(p) for p in sorted(m.dominance_order)],
        }
        _say(args, gio.emit_verdict(doc))
    else:
        lines = [f"separator: {' '.join(g.label(v) for v in q)}"]
        lines.append(f"classes: {m.size}")
        for i, gamma in enumerate(m.gammas):
            traces = " ".join(
                "{" + ",".join(g.label(v) for v in tr) + "}" for tr in gamma.traces
            )
            lines.append(f"class {i}: members {list(m.class_members[i])} traces {traces}")
        for u, v, c in m.edges.edges():
            lines.append(f"{c}: {u} -- {v}")
        _say(args, "\n".join(lines))
    return 0


def _cmd_obstruction(args) -> int:
    fam = _FAMILIES.get(args.family)
    if fam is None:
        raise InputError(f"unknown family {args.family!r}")
    pattern = build_family(fam, args.size)
    if args.dot:
        _say(args, gio.emit_dot(pattern))
    elif args.json:
        doc = {
            "family": args.family,
            "size": pattern.size,
            "vertices": pattern.pattern.n,
            "antipodal": [list(e) for e in sorted(pattern.pattern.antipodal)],
            "dominance": [list(e) for e in sorted(pattern.pattern.dominance)],
        }
        _say(args, gio.emit_verdict(doc))
    else:
        lines = [f"{args.family} size {pattern.size}: {pattern.pattern.n} vertices"]
        for u, v, c in pattern.pattern.edges():
            lines.append(f"{c}: {u} -- {v}")
        _say(args, "\n".join(lines))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("edgelist", "graph6"), default="edgelist",
        help="graph file format (default edgelist)",
    )
    common.add_argument(
        "--gplus", action="store_true",
        help="attach a pendant vertex to every vertex before analysis",
    )
    common.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("--quiet", action="store_true", help="exit code only")

    ap = argparse.ArgumentParser(prog="pathgraph", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", parents=[common], help="path graph verdict")
    p.add_argument("graph", nargs="?", default="-", help="file or - for stdin")
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser(
        "certify", parents=[common],
        help="full verdict document with certificates",
    )
    p.add_argument("graph", nargs="?", default="-")
    p.add_argument(
        "--realize", action="store_true",
        help="include a clique path tree and host realization when accepted",
    )
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("realize", parents=[common], help="build a clique path tree")
    p.add_argument("graph", nargs="?", default="-")
    p.add_argument("--dot", action="store_true", help="DOT output")
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("oracle", parents=[common], help="brute-force verdict")
    p.add_argument("graph", nargs="?", default="-")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("gen", parents=[common], help="seeded example generators")
    p.add_argument("--kind", choices=("path", "chordal", "k4hub"), required=True)
    p.add_argument("--n", type=int, default=8, help="size parameter")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--tree-nodes", type=int, default=0,
        help="host tree size for --kind path (default max(2, n))",
    )
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser(
        "attachedness", parents=[common],
        help="attachedness graph at one separator",
    )
    p.add_argument("graph", nargs="?", default="-")
    p.add_argument(
        "--separator", type=int, default=0,
        help="index into the canonical separator list",
    )
    p.add_argument("--dot", action="store_true", help="DOT output")
    p.set_defaults(func=_cmd_attachedness)

    p = sub.add_parser(
        "obstruction", parents=[common], help="print a forbidden pattern"
    )
    p.add_argument("--family", choices=sorted(_FAMILIES), required=True)
    p.add_argument("--size", type=int, default=1, help="family index k or n")
    p.add_argument("--dot", action="store_true", help="DOT output")
    p.set_defaults(func=_cmd_obstruction)

    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, PreconditionError, GenerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GuardRefusal, RealizationError) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
