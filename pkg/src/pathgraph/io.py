"""Graph file formats, verdict documents, and DOT output."""

from __future__ import annotations

import json

from .attach import AttachednessGraph
from .chordal import CliqueTree
from .errors import InputError
from .graphs import ANTIPODAL, EdgeColoredGraph, Graph
from .obstructions import Obstruction
from .realize import HostRealization
from .recognize import (
    DIRECTED_PATH_GRAPH,
    NOT_CHORDAL,
    PATH_GRAPH,
    DirectedVerdict,
    SeparatorReport,
    Verdict,
)

GRAPH6_HEADER = ">>graph6<<"

_FAMILY_JSON = {
    "W0": "w0",
    "W1": "w1",
    "F": "f",
    "FTILDE": "ftilde",
    "DF": "df",
    "FULL_TRIANGLE": "full_antipodal_triangle",
}


def parse_graph(text: str, fmt: str = "edgelist") -> Graph:
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "graph6":
        return parse_graph6(text)
    raise InputError(f"unknown graph format {fmt!r}")


def parse_edgelist(text: str) -> Graph:
    """Lines "u v" with 0-based ids, optional "p <n>" header, "#" comments."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    max_seen = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None or edges:
                raise InputError(f"line {lineno}: header after data")
            if len(parts) != 2:
                raise InputError(f"line {lineno}: header must be 'p <n>'")
            try:
                n = int(parts[1])
            except ValueError:
                raise InputError(f"line {lineno}: bad vertex count {parts[1]!r}")
            if n < 0:
                raise InputError(f"line {lineno}: negative vertex count")
            continue
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"line {lineno}: non-integer vertex id in {line!r}")
        if u < 0 or v < 0:
            raise InputError(f"line {lineno}: negative vertex id")
        if u == v:
            raise InputError(f"line {lineno}: self-loop on {u}")
        if n is not None and (u >= n or v >= n):
            raise InputError(f"line {lineno}: vertex id beyond declared count {n}")
        edges.append((u, v) if u < v else (v, u))
        max_seen = max(max_seen, u, v)
    if n is None:
        if max_seen < 0:
            raise InputError("empty graph input (no header, no edges)")
        n = max_seen + 1
    return Graph.from_edges(n, sorted(set(edges)))


def emit_edgelist(g: Graph) -> str:
    lines = [f"p {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    if not s:
        raise InputError("empty graph6 input")
    s = s.splitlines()[0].strip()
    vals = []
    for ch in s:
        v = ord(ch) - 63
        if not 0 <= v < 64:
            raise InputError(f"graph6: invalid character {ch!r}")
        vals.append(v)
    pos = 0
    if vals[0] < 63:
        n = vals[0]
        pos = 1
    elif len(vals) >= 4 and vals[1] < 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    elif len(vals) >= 8:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    else:
        raise InputError("graph6: truncated size field")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(vals) - pos < need:
        raise InputError("graph6: truncated edge bits")
    bits = []
    for v in vals[pos:pos + need]:
        for k in range(5, -1, -1):
            bits.append((v >> k) & 1)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph.from_edges(n, edges)


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = chr(126) + "".join(
            chr(((n >> k) & 63) + 63) for k in (12, 6, 0)
        )
    else:
        head = chr(126) * 2 + "".join(
            chr(((n >> k) & 63) + 63) for k in (30, 24, 18, 12, 6, 0)
        )
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = "".join(
        chr(sum(b << (5 - k) for k, b in enumerate(bits[p:p + 6])) + 63)
        for p in range(0, len(bits), 6)
    )
    return head + body + "\n"


def _vmapper(report: SeparatorReport):
    vm = report.vertex_map
    if vm is None:
        return lambda v: v
    return lambda v: vm[v]


def _obstruction_doc(o: Obstruction, vmap) -> dict:
    p = o.pattern
    return {
        "kind": _FAMILY_JSON[p.family],
        "size": p.size,
        "embedding": list(o.embedding),
        "witness": None if o.witness is None else vmap(o.witness),
        "pattern_antipodal": [list(e) for e in sorted(p.pattern.antipodal)],
        "pattern_dominance": [list(e) for e in sorted(p.pattern.dominance)],
        "q": [vmap(v) for v in o.q],
    }


def _refutation_doc(r, vmap) -> dict:
    doc: dict = {"kind": r.kind, "classes": list(r.classes)}
    if r.witness is not None:
        doc["witness_class"] = r.witness
    if r.member is not None:
        doc["member"] = list(r.member)
    if r.cycle is not None:
        doc["cycle"] = list(r.cycle)
    if r.path is not None:
        doc["path"] = list(r.path)
    if r.endpoint_colors is not None:
        doc["endpoint_colors"] = list(r.endpoint_colors)
    if r.pair is not None:
        doc["pair"] = list(r.pair)
    return doc


def separator_doc(report: SeparatorReport) -> dict:
    vmap = _vmapper(report)
    m = report.attachedness
    dec = report.decomposition
    s = report.skeleton
    doc: dict = {
        "q": [vmap(v) for v in dec.q],
        "classes": m.size,
        "class_members": [list(mem) for mem in m.class_members],
        "gammas": [
            {
                "index": gamma.index,
                "component": [vmap(v) for v in gamma.component],
                "traces": [[vmap(v) for v in tr] for tr in gamma.traces],
            }
            for gamma in dec.gammas
        ],
        "antipodal_edges": [
            [u, v] for u, v, c in m.edges.edges() if c == ANTIPODAL
        ],
        "dominance_pairs": [list(p) for p in sorted(m.dominance_order)],
        "upper": list(s.upper),
        "d_single": {str(i + 1): list(d) for i, d in enumerate(s.d_single)},
        "d_pair": {f"{i},{j}": list(d) for (i, j), d in sorted(s.d_pair.items())},
        "coloring": None,
        "refutation": None,
        "obstruction": None,
    }
    if report.coloring is not None:
        doc["coloring"] = {str(k): c for k, c in sorted(report.coloring.f.items())}
    if report.refutation is not None:
        doc["refutation"] = _refutation_doc(report.refutation, vmap)
    if report.obstruction is not None:
        doc["obstruction"] = _obstruction_doc(report.obstruction, vmap)
    return doc


def realization_doc(t: CliqueTree, host: HostRealization | None = None) -> dict:
    doc: dict = {
        "cliques": [list(c) for c in t.cliques],
        "tree_edges": [list(e) for e in sorted(t.edges)],
    }
    if host is not None:
        doc["host"] = {
            "host_n": host.host_n,
            "host_edges": [list(e) for e in sorted(host.host_edges)],
            "paths": [list(p) for p in host.paths],
        }
    return doc


def verdict_document(
    g: Graph,
    verdict: Verdict,
    gplus: bool = False,
    directed: DirectedVerdict | None = None,
    realization: dict | None = None,
) -> dict:
    doc: dict = {
        "input": {"n": g.n, "edges": g.num_edges, "gplus": gplus},
        "chordal": verdict.status != NOT_CHORDAL,
        "hole": None if verdict.hole is None else list(verdict.hole.cycle),
        "path_graph": verdict.status == PATH_GRAPH,
        "separators": [separator_doc(r) for r in verdict.reports],
    }
    if directed is not None:
        doc["directed_path_graph"] = directed.status == DIRECTED_PATH_GRAPH
        if directed.q is not None:
            doc["directed_detail"] = {
                "q": list(directed.q),
                "odd_cycle": None
                if directed.odd_cycle is None
                else list(directed.odd_cycle),
            }
    if realization is not None:
        doc["realization"] = realization
    return doc


def emit_verdict(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _dot_colored(name: str, ecg: EdgeColoredGraph, node_labels=None) -> str:
    lines = [f"graph {name} {{"]
    for v in range(ecg.n):
        label = str(v) if node_labels is None else node_labels[v]
        lines.append(f'  k{v} [label="{label}"];')
    for u, v, color in ecg.edges():
        style = "" if color == ANTIPODAL else " [style=dotted]"
        lines.append(f"  k{u} -- k{v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_dot(obj, graph: Graph | None = None) -> str:
    """DOT text for clique trees, attachedness graphs, and obstruction
    patterns. Antipodal edges are solid, dominance edges dotted."""
    from .obstructions import ObstructionPattern

    if isinstance(obj, CliqueTree):
        lines = ["graph cliquetree {", "  node [shape=box];"]
        for i, c in enumerate(obj.cliques):
            names = [graph.label(v) if graph is not None else str(v) for v in c]
            lines.append(f'  c{i} [label="{" ".join(names)}"];')
        for a, b in sorted(obj.edges):
            lines.append(f"  c{a} -- c{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    if isinstance(obj, AttachednessGraph):
        labels = []
        for i, gamma in enumerate(obj.gammas):
            traces = " ".join(
                "{" + ",".join(str(v) for v in tr) + "}" for tr in gamma.traces
            )
            labels.append(f"{i}: {traces}")
        return _dot_colored("attachedness", obj.edges, labels)
    if isinstance(obj, ObstructionPattern):
        name = f"{obj.family.lower()}_{obj.pattern.n}"
        return _dot_colored(name, obj.pattern)
    if isinstance(obj, EdgeColoredGraph):
        return _dot_colored("colored", obj)
    raise InputError(f"cannot render {type(obj).__name__} as DOT")
