"""Undirected graphs on dense integer vertex ids, plus two-colored edge graphs.

Vertex sets are canonically represented as strictly increasing tuples of ints.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import InputError

VertexSet = tuple[int, ...]

ANTIPODAL = "antipodal"
DOMINANCE = "dominance"


def vset(vertices: Iterable[int]) -> VertexSet:
    """Canonical vertex set: strictly increasing tuple, duplicates dropped."""
    return tuple(sorted(set(vertices)))


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    adj: tuple[frozenset[int], ...]
    labels: tuple[str, ...] | None = None

    @staticmethod
    def from_edges(
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Iterable[str] | None = None,
    ) -> "Graph":
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        lab = tuple(labels) if labels is not None else None
        if lab is not None and len(lab) != n:
            raise InputError(f"{len(lab)} labels for {n} vertices")
        return Graph(n, tuple(frozenset(s) for s in nbrs), lab)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        return [(u, v) for u in range((self.n)) for v in sorted(self.adj[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def __repr__(self) -> str:  # pragma: no cover
        return f"Graph(n={self.n}, m={self.num_edges})"


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, VertexSet]:
    """Induced subgraph on the given vertices.

    Returns the new graph together with the id map: position k of the returned
    tuple is the original id of new vertex k.
    """
    idmap = vset(vertices)
    if idmap and not (0 <= idmap[0] and idmap[-1] < g.n):
        raise InputError(f"vertices {idmap} out of range for n={g.n}")
    back = {old: new for new, old in enumerate(idmap)}
    adj = tuple(
        frozenset(back[u] for u in g.adj[old] if u in back) for old in idmap
    )
    labels = tuple(g.label(old) for old in idmap) if g.labels is not None else None
    return Graph(len(idmap), adj, labels), idmap


def connected_components(g: Graph) -> list[VertexSet]:
    """Connected components, each a canonical vertex set, sorted by smallest member."""
    seen = [False] * g.n
    comps: list[VertexSet] = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        part = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    part.append(w)
                    queue.append(w)
        comps.append(vset(part))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    """True when the given vertices are pairwise adjacent."""
    vs = vset(vertices)
    return all(g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :])


def graph_plus(g: Graph) -> Graph:
    """Pendant extension: one new degree-1 vertex n+i attached to each vertex i."""
    edges = g.edges() + [(i, g.n + i) for i in range(g.n)]
    labels = None
    if g.labels is not None:
        labels = tuple(g.labels) + tuple(f"{lab}+" for lab in g.labels)
    return Graph.from_edges(2 * g.n, edges, labels)


@dataclass(frozen=True)
class EdgeColoredGraph:
    """Graph whose every edge carries exactly one of two colors."""

    n: int
    antipodal: frozenset[tuple[int, int]]
    dominance: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        for name, es in (("antipodal", self.antipodal), ("dominance", self.dominance)):
            for u, v in es:
                if not (0 <= u < v < self.n):
                    raise InputError(f"bad {name} edge ({u}, {v}) for n={self.n}")
        if self.antipodal & self.dominance:
            raise InputError("an edge cannot carry both colors")

    def color_of(self, u: int, v: int) -> str | None:
        e = _norm_edge(u, v)
        if e in self.antipodal:
            return ANTIPODAL
        if e in self.dominance:
            return DOMINANCE
        return None

    def has_edge(self, u: int, v: int) -> bool:
        e = _norm_edge(u, v)
        return e in self.antipodal or e in self.dominance

    def edges(self) -> list[tuple[int, int, str]]:
        """All edges as (u, v, color) with u < v, sorted by endpoint pair."""
        out = [(u, v, ANTIPODAL) for u, v in self.antipodal]
        out += [(u, v, DOMINANCE) for u, v in self.dominance]
        return sorted(out)
