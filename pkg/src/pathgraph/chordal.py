"""Chordality: elimination orders, hole certificates, maximal cliques, clique trees."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InputError, InvariantError, PreconditionError
from .graphs import Graph, VertexSet, is_connected, vset


@dataclass(frozen=True)
class EliminationOrder:
    """A perfect elimination order; order[0] is eliminated first."""

    order: tuple[int, ...]


@dataclass(frozen=True)
class HoleCertificate:
    """A chordless cycle of length >= 4, listed in cyclic order."""

    cycle: tuple[int, ...]


@dataclass(frozen=True)
class CliqueTree:
    """Clique tree: canonically sorted maximal cliques plus tree edges on their indices."""

    cliques: tuple[VertexSet, ...]
    edges: frozenset[tuple[int, int]]


def _mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search; ties broken toward the smallest vertex id.

    Returns the selection order (first selected first).
    """
    weight = [0] * g.n
    selected = [False] * g.n
    order: list[int] = []
    for _ in range(g.n):
        best = -1
        for v in range(g.n):
            if not selected[v] and (best == -1 or weight[v] > weight[best]):
                best = v
        selected[best] = True
        order.append(best)
        for u in g.adj[best]:
            if not selected[u]:
                weight[u] += 1
    return order


def _check_peo(g: Graph, order: list[int]) -> tuple[int, int, int] | None:
    """First violation (v, p, x) of the elimination order, or None when perfect.

    p is v's earliest-eliminated later neighbor; x a later neighbor not adjacent to p.
    """
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = sorted((u for u in g.adj[v] if pos[u] > pos[v]), key=lambda u: pos[u])
        if len(later) <= 1:
            continue
        p = later[0]
        for x in later[1:]:
            if not g.has_edge(p, x):
                return (v, p, x)
    return None


def _hole_through(g: Graph, v: int, x: int, y: int) -> tuple[int, ...] | None:
    """Hole v-x-...-y-v via a shortest x..y path avoiding N[v] \\ {x, y}."""
    banned = (g.adj[v] | {v}) - {x, y}
    parent: dict[int, int] = {x: -1}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        if u == y:
            path = [u]
            while parent[path[-1]] != -1:
                path.append(parent[path[-1]])
            path.reverse()  # x .. y
            return (v, *path)
        for w in sorted(g.adj[u]):
            if w not in banned and w not in parent:
                parent[w] = u
                queue.append(w)
    return None


def _canonical_cycle(cycle: tuple[int, ...]) -> tuple[int, ...]:
    """Rotate the smallest vertex to the front, then pick the smaller direction."""
    k = cycle.index(min(cycle))
    rot = cycle[k:] + cycle[:k]
    rev = (rot[0],) + rot[1:][::-1]
    return rot if rot[1] <= rev[1] else rev


def _find_hole(g: Graph, seed: tuple[int, int, int]) -> tuple[int, ...]:
    """Extract some hole of a non-chordal graph, trying the violating triple first."""
    v, p, x = seed
    hole = _hole_through(g, v, p, x)
    if hole is not None:
        return hole
    # Defensive fallback: scan all (v; x, y) with x, y nonadjacent neighbors of v.
    for v in range(g.n):
        nbrs = sorted(g.adj[v])
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1 :]:
                if not g.has_edge(a, b):
                    hole = _hole_through(g, v, a, b)
                    if hole is not None:
                        return hole
    raise InvariantError("elimination order failed but no hole was found")


def peo_or_hole(g: Graph) -> EliminationOrder | HoleCertificate:
    """Perfect elimination order of a chordal graph, or a hole certificate.

    The order comes from maximum cardinality search with smallest-id tie-breaks,
    so it is deterministic; the hole is extracted from the first violation.
    """
    selection = _mcs_order(g)
    order = selection[::-1]
    bad = _check_peo(g, order)
    if bad is None:
        return EliminationOrder(tuple(order))
    return HoleCertificate(_canonical_cycle(_find_hole(g, bad)))


def is_chordal(g: Graph) -> bool:
    return isinstance(peo_or_hole(g), EliminationOrder)


def maximal_cliques(g: Graph) -> list[VertexSet]:
    """Maximal cliques of a chordal graph, canonically sorted.

    A chordal graph on n vertices has at most n maximal cliques; they are read
    off an elimination order (each vertex together with its later neighbors).
    """
    res = peo_or_hole(g)
    if isinstance(res, HoleCertificate):
        raise PreconditionError("maximal_cliques requires a chordal graph")
    order = res.order
    pos = {v: i for i, v in enumerate(order)}
    cands: set[VertexSet] = set()
    for v in order:
        cands.add(vset([v] + [u for u in g.adj[v] if pos[u] > pos[v]]))
    cliques = [
        c
        for c in cands
        if not any(c != d and set(c) <= set(d) for d in cands)
    ]
    return sorted(cliques)


def clique_tree(g: Graph) -> CliqueTree:
    """A clique tree of a connected chordal graph.

    Maximum-weight spanning tree of the clique graph under intersection sizes
    (Kruskal, ties toward lexicographically smaller index pairs), validated
    against the induced-subtree property.
    """
    if not is_connected(g):
        raise PreconditionError("clique_tree requires a connected graph")
    cliques = maximal_cliques(g)
    c = len(cliques)
    if c == 0:
        return CliqueTree((), frozenset())
    sets = [set(q) for q in cliques]
    cands = []
    for i in range(c):
        for j in range(i + 1, c):
            w = len(sets[i] & sets[j])
            if w > 0:
                cands.append((-w, i, j))
    cands.sort()
    parent = list(range(c))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    edges: set[tuple[int, int]] = set()
    for _, i, j in cands:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            edges.add((i, j))
    if len(edges) != c - 1:
        raise InvariantError("clique graph of a connected chordal graph must be connected")
    tree = CliqueTree(tuple(cliques), frozenset(edges))
    if not _has_subtree_property(g, tree):
        raise InvariantError("maximum-weight spanning tree is not a clique tree")
    return tree


def _tree_adj(c: int, edges: frozenset[tuple[int, int]]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(c)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    return adj


def _is_tree(c: int, edges: frozenset[tuple[int, int]]) -> bool:
    if len(edges) != max(c - 1, 0):
        return False
    if c == 0:
        return True
    adj = _tree_adj(c, edges)
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == c


def _vertex_node_sets(g: Graph, tree: CliqueTree) -> list[list[int]]:
    occ: list[list[int]] = [[] for _ in range(g.n)]
    for idx, q in enumerate(tree.cliques):
        for v in q:
            occ[v].append(idx)
    return occ


def _has_subtree_property(g: Graph, tree: CliqueTree) -> bool:
    """Every vertex's cliques induce a connected subtree."""
    adj = _tree_adj(len(tree.cliques), tree.edges)
    for nodes in _vertex_node_sets(g, tree):
        if len(nodes) <= 1:
            continue
        inside = set(nodes)
        seen = {nodes[0]}
        queue = deque([nodes[0]])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w in inside and w not in seen:
                    seen.add(w)
                    queue.append(w)
        if len(seen) != len(inside):
            return False
    return True


def is_valid_clique_tree(g: Graph, tree: CliqueTree) -> bool:
    """Tree on the maximal cliques satisfying the induced-subtree property."""
    if list(tree.cliques) != maximal_cliques(g):
        return False
    if not _is_tree(len(tree.cliques), tree.edges):
        return False
    return _has_subtree_property(g, tree)


def is_clique_path_tree(g: Graph, tree: CliqueTree) -> bool:
    """True when every vertex's cliques induce a path in the tree.

    The tree must be over exactly maximal_cliques(g) in canonical order.
    """
    if list(tree.cliques) != maximal_cliques(g):
        raise InputError("tree is not over the canonical maximal clique list")
    if not _is_tree(len(tree.cliques), tree.edges):
        return False
    adj = _tree_adj(len(tree.cliques), tree.edges)
    for nodes in _vertex_node_sets(g, tree):
        if len(nodes) <= 1:
            continue
        inside = set(nodes)
        within = 0
        for u in nodes:
            d = sum(1 for w in adj[u] if w in inside)
            if d > 2:
                return False
            within += d
        if within != 2 * (len(nodes) - 1):
            # not connected inside the tree (or has a cycle, impossible in a tree)
            return False
    return True
