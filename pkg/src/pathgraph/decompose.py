"""Decomposition of a chordal graph along maximal clique separators."""

from __future__ import annotations

from dataclasses import dataclass

from .chordal import is_chordal, maximal_cliques
from .errors import PreconditionError
from .graphs import (
    Graph,
    VertexSet,
    connected_components,
    induced_subgraph,
    is_clique,
    is_connected,
    vset,
)


@dataclass(frozen=True)
class GammaComponent:
    """One separated part: the subgraph induced by a component plus the separator.

    relevant_cliques are the maximal cliques of that subgraph which meet the
    separator but do not equal it; traces are their intersections with the
    separator, deduplicated.
    """

    index: int
    vertices: VertexSet          # component plus separator, original ids
    component: VertexSet         # the component itself
    relevant_cliques: tuple[VertexSet, ...]
    traces: tuple[VertexSet, ...]


@dataclass(frozen=True)
class Decomposition:
    """All parts of a graph relative to one maximal clique separator."""

    q: VertexSet
    gammas: tuple[GammaComponent, ...]
    neighbor_map: dict[int, tuple[int, ...]]  # v in Q -> gammas with v in some trace

    @property
    def size(self) -> int:
        return len(self.gammas)


def clique_separators(g: Graph) -> list[VertexSet]:
    """Maximal cliques whose removal disconnects the graph, canonically ordered.

    Requires a connected chordal graph.
    """
    if not is_chordal(g):
        raise PreconditionError("clique_separators requires a chordal graph")
    if not is_connected(g):
        raise PreconditionError("clique_separators requires a connected graph")
    out = []
    for q in maximal_cliques(g):
        rest = [v for v in range(g.n) if v not in set(q)]
        sub, _ = induced_subgraph(g, rest)
        if len(connected_components(sub)) >= 2:
            out.append(q)
    return out


def _check_separator(g: Graph, q: VertexSet) -> None:
    qs = set(q)
    if not is_clique(g, q):
        raise PreconditionError(f"{q} is not a clique")
    for v in range(g.n):
        if v not in qs and qs <= g.adj[v]:
            raise PreconditionError(f"{q} is not a maximal clique")


def relevant_cliques(g: Graph, q: VertexSet, part: VertexSet) -> tuple[VertexSet, ...]:
    """Maximal cliques of G[part ∪ Q] that meet Q but differ from Q, canonical order."""
    sub, idmap = induced_subgraph(g, set(part) | set(q))
    qs = set(q)
    out = []
    for c in maximal_cliques(sub):
        orig = vset(idmap[v] for v in c)
        if set(orig) & qs and set(orig) != qs:
            out.append(orig)
    return tuple(sorted(out))


def gamma_components(g: Graph, q: VertexSet) -> Decomposition:
    """Decompose a connected chordal graph along the maximal clique separator q."""
    if not is_chordal(g):
        raise PreconditionError("gamma_components requires a chordal graph")
    if not is_connected(g):
        raise PreconditionError("gamma_components requires a connected graph")
    q = vset(q)
    _check_separator(g, q)
    qs = set(q)
    rest, _ = induced_subgraph(g, [v for v in range(g.n) if v not in qs])
    restmap = [v for v in range(g.n) if v not in qs]
    parts = [vset(restmap[v] for v in comp) for comp in connected_components(rest)]
    if len(parts) < 2:
        raise PreconditionError(f"{q} does not separate the graph")

    gammas = []
    for idx, part in enumerate(parts):
        rel = relevant_cliques(g, q, part)
        traces = tuple(sorted({vset(set(k) & qs) for k in rel}))
        gammas.append(
            GammaComponent(
                index=idx,
                vertices=vset(set(part) | qs),
                component=part,
                relevant_cliques=rel,
                traces=traces,
            )
        )

    nmap: dict[int, tuple[int, ...]] = {}
    for v in q:
        nmap[v] = tuple(
            gm.index for gm in gammas if any(v in t for t in gm.traces)
        )
    return Decomposition(q=q, gammas=tuple(gammas), neighbor_map=nmap)
