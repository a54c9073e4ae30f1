"""Recognition of path graphs and directed path graphs with certificates."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .attach import AttachednessGraph, quotient
from .chordal import HoleCertificate, peo_or_hole
from .coloring import Refutation, Skeleton, WeakColoring, skeleton, weak_coloring
from .decompose import Decomposition, clique_separators, gamma_components
from .graphs import Graph, VertexSet, connected_components, induced_subgraph, vset
from .obstructions import Obstruction, refutation_to_obstruction

NOT_CHORDAL = "NOT_CHORDAL"
PATH_GRAPH = "PATH_GRAPH"
NOT_PATH_GRAPH = "NOT_PATH_GRAPH"
DIRECTED_PATH_GRAPH = "DIRECTED_PATH_GRAPH"
NOT_DIRECTED_PATH_GRAPH = "NOT_DIRECTED_PATH_GRAPH"


@dataclass(frozen=True)
class SeparatorReport:
    """Analysis of one clique separator.

    All structures use the analyzed graph's local vertex ids; vertex_map sends
    those to the input graph's ids when a component was analyzed on its own
    (it is None when the input was connected). The q field is always global.
    """

    q: VertexSet
    decomposition: Decomposition
    attachedness: AttachednessGraph
    skeleton: Skeleton
    coloring: WeakColoring | None = None
    refutation: Refutation | None = None
    obstruction: Obstruction | None = None
    vertex_map: VertexSet | None = None


@dataclass(frozen=True)
class Verdict:
    status: str
    hole: HoleCertificate | None
    reports: tuple[SeparatorReport, ...]

    @property
    def is_path_graph(self) -> bool:
        return self.status == PATH_GRAPH


@dataclass(frozen=True)
class DirectedVerdict:
    status: str
    hole: HoleCertificate | None
    q: VertexSet | None = None              # failing separator, global ids
    odd_cycle: tuple[int, ...] | None = None  # class ids at that separator

    @property
    def is_directed_path_graph(self) -> bool:
        return self.status == DIRECTED_PATH_GRAPH


def _global_q(q: VertexSet, idmap: VertexSet | None) -> VertexSet:
    return q if idmap is None else vset(idmap[v] for v in q)


def _component_reports(
    g: Graph, idmap: VertexSet | None
) -> tuple[list[SeparatorReport], bool]:
    """Per-separator reports for one connected chordal graph.

    Stops at the first refuted separator; the boolean says whether all passed.
    """
    reports: list[SeparatorReport] = []
    for q in clique_separators(g):
        dec = gamma_components(g, q)
        m = quotient(dec)
        s = skeleton(m)
        res = weak_coloring(m)
        if isinstance(res, Refutation):
            obs = refutation_to_obstruction(m, s, res)
            reports.append(
                SeparatorReport(
                    q=_global_q(q, idmap),
                    decomposition=dec,
                    attachedness=m,
                    skeleton=s,
                    refutation=res,
                    obstruction=obs,
                    vertex_map=idmap,
                )
            )
            return reports, False
        reports.append(
            SeparatorReport(
                q=_global_q(q, idmap),
                decomposition=dec,
                attachedness=m,
                skeleton=s,
                coloring=res,
                vertex_map=idmap,
            )
        )
    return reports, True


def recognize_path_graph(g: Graph) -> Verdict:
    """Certified recognition: hole, per-separator weak colorings, or a refuted
    separator with its colored obstruction.

    Disconnected inputs are analyzed component by component (a graph is a path
    graph exactly when all its components are).
    """
    res = peo_or_hole(g)
    if isinstance(res, HoleCertificate):
        return Verdict(status=NOT_CHORDAL, hole=res, reports=())
    comps = connected_components(g)
    all_reports: list[SeparatorReport] = []
    if len(comps) <= 1:
        reports, ok = _component_reports(g, None)
        all_reports.extend(reports)
        if not ok:
            return Verdict(NOT_PATH_GRAPH, None, tuple(all_reports))
    else:
        for comp in comps:
            sub, idmap = induced_subgraph(g, comp)
            reports, ok = _component_reports(sub, idmap)
            all_reports.extend(reports)
            if not ok:
                return Verdict(NOT_PATH_GRAPH, None, tuple(all_reports))
    return Verdict(PATH_GRAPH, None, tuple(all_reports))


def _odd_antipodal_cycle(m: AttachednessGraph) -> tuple[int, ...] | None:
    """Odd cycle in the antipodal graph over classes, or None when bipartite."""
    adj: dict[int, list[int]] = {c: [] for c in range(m.size)}
    for a, b in sorted(m.edges.antipodal):
        adj[a].append(b)
        adj[b].append(a)
    bit: dict[int, int] = {}
    parent: dict[int, int | None] = {}

    def chain(c: int) -> list[int]:
        out = [c]
        while parent[out[-1]] is not None:
            out.append(parent[out[-1]])
        return out

    for start in range(m.size):
        if start in bit:
            continue
        bit[start] = 0
        parent[start] = None
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in sorted(adj[u]):
                if w not in bit:
                    bit[w] = bit[u] ^ 1
                    parent[w] = u
                    queue.append(w)
                elif bit[w] == bit[u]:
                    up, wp = chain(u)[::-1], chain(w)[::-1]
                    l = 0
                    while l < len(up) and l < len(wp) and up[l] == wp[l]:
                        l += 1
                    return tuple(up[l - 1 :] + wp[l:][::-1])
    return None


def recognize_directed_path_graph(g: Graph) -> DirectedVerdict:
    """A chordal graph is a directed path graph exactly when every separator's
    antipodality structure is bipartite."""
    res = peo_or_hole(g)
    if isinstance(res, HoleCertificate):
        return DirectedVerdict(status=NOT_CHORDAL, hole=res)
    comps = connected_components(g)
    pieces = (
        [(g, None)]
        if len(comps) <= 1
        else [induced_subgraph(g, comp) for comp in comps]
    )
    for sub, idmap in pieces:
        for q in clique_separators(sub):
            m = quotient(gamma_components(sub, q))
            cycle = _odd_antipodal_cycle(m)
            if cycle is not None:
                return DirectedVerdict(
                    status=NOT_DIRECTED_PATH_GRAPH,
                    hole=None,
                    q=_global_q(q, idmap),
                    odd_cycle=cycle,
                )
    return DirectedVerdict(status=DIRECTED_PATH_GRAPH, hole=None)
