"""Seeded generators: path graphs with host realizations, chordal graphs, and
the hub family of non-path chordal graphs."""

from __future__ import annotations

from ._sweep_py import decode_pruefer
from .errors import GenerationError, InputError
from .graphs import Graph, is_connected
from .realize import HostRealization, _norm

_MASK64 = (1 << 64) - 1
_MAX_RESAMPLES = 64


class SplitMix64:
    """Tiny deterministic RNG (SplitMix64), so seeds mean the same thing
    everywhere, independent of interpreter version."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randrange(self, n: int) -> int:
        if n <= 0:
            raise ValueError("randrange needs n >= 1")
        return self.next_u64() % n


def _random_tree(rng: SplitMix64, m: int) -> list[tuple[int, int]]:
    if m <= 1:
        return []
    if m == 2:
        return [(0, 1)]
    seq = [rng.randrange(m) for _ in range(m - 2)]
    return decode_pruefer(seq, m)


def _tree_adj(m: int, edges: list[tuple[int, int]]) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {i: [] for i in range(m)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    for v in adj:
        adj[v].sort()
    return adj


def _tree_path(adj: dict[int, list[int]], a: int, b: int) -> list[int]:
    parent = {a: -1}
    queue = [a]
    while queue:
        nxt = []
        for u in queue:
            for w in adj[u]:
                if w not in parent:
                    parent[w] = u
                    nxt.append(w)
        queue = nxt
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def _intersection_graph(n: int, node_sets: list[set[int]]) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if node_sets[u] & node_sets[v]
    ]
    return Graph.from_edges(n, edges)


def gen_path_graph(
    n_tree_nodes: int, n_paths: int, seed: int
) -> tuple[Graph, HostRealization]:
    """A connected path graph sampled as paths of a random host tree.

    Returns the graph together with the realization that produced it.
    Resamples until the intersection graph is connected.
    """
    if n_tree_nodes < 1 or n_paths < 1:
        raise InputError("gen_path_graph needs at least one tree node and one path")
    rng = SplitMix64(seed)
    for _ in range(_MAX_RESAMPLES):
        edges = _random_tree(rng, n_tree_nodes)
        adj = _tree_adj(n_tree_nodes, edges)
        paths = []
        for _ in range(n_paths):
            a = rng.randrange(n_tree_nodes)
            b = rng.randrange(n_tree_nodes)
            paths.append(_tree_path(adj, a, b))
        g = _intersection_graph(n_paths, [set(p) for p in paths])
        if is_connected(g):
            host = HostRealization(
                host_n=n_tree_nodes,
                host_edges=frozenset(_norm(a, b) for a, b in edges),
                paths=tuple(tuple(p) for p in paths),
            )
            return g, host
    raise GenerationError(
        f"no connected sample in {_MAX_RESAMPLES} tries "
        f"(tree nodes {n_tree_nodes}, paths {n_paths}, seed {seed})"
    )


def gen_chordal(n: int, seed: int) -> Graph:
    """A connected chordal graph on n vertices, sampled as subtrees of a
    random host tree."""
    if n < 1:
        raise InputError("gen_chordal needs n >= 1")
    rng = SplitMix64(seed)
    m = n
    for _ in range(_MAX_RESAMPLES):
        edges = _random_tree(rng, m)
        adj = _tree_adj(m, edges)
        subtrees = []
        for _ in range(n):
            size = 1 + rng.randrange(m)
            start = rng.randrange(m)
            nodes = {start}
            frontier = list(adj[start])
            while len(nodes) < size and frontier:
                pick = frontier.pop(rng.randrange(len(frontier)))
                if pick in nodes:
                    continue
                nodes.add(pick)
                for w in adj[pick]:
                    if w not in nodes:
                        frontier.append(w)
            subtrees.append(nodes)
        g = _intersection_graph(n, subtrees)
        if is_connected(g):
            return g
    raise GenerationError(
        f"no connected sample in {_MAX_RESAMPLES} tries (n {n}, seed {seed})"
    )


def k4_hub(t: int = 4) -> Graph:
    """The complete graph on t hub vertices with a pendant triangle on each
    pair {first, i}; chordal but not a path graph for t >= 4."""
    if t < 3:
        raise InputError("k4_hub needs t >= 3")
    n = t + (t - 1)
    edges = [(i, j) for i in range(t) for j in range(i + 1, t)]
    labels = [str(i + 1) for i in range(t)]
    for i in range(1, t):
        p = t - 1 + i
        edges.append((0, p))
        edges.append((i, p))
        labels.append(chr(ord("a") + i - 1))
    return Graph.from_edges(n, edges, labels=tuple(labels))
