"""Pure-Python kernel: sweep all labeled trees on c nodes in Pruefer order,
returning the first tree in which every vertex-occurrence mask induces a path.

The compiled twin lives in _sweep.pyx; keep the two in behavioral lockstep.
"""

from __future__ import annotations

from heapq import heapify, heappop, heappush


def decode_pruefer(seq: list[int], c: int) -> list[tuple[int, int]]:
    """Edges of the labeled tree on 0..c-1 encoded by a Pruefer sequence (c >= 2)."""
    degree = [1] * c
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(c) if degree[v] == 1]
    heapify(leaves)
    edges = []
    for x in seq:
        leaf = heappop(leaves)
        edges.append((leaf, x) if leaf < x else (x, leaf))
        degree[x] -= 1
        if degree[x] == 1:
            heappush(leaves, x)
    u = heappop(leaves)
    v = heappop(leaves)
    edges.append((u, v) if u < v else (v, u))
    return edges


def _all_paths(edges: list[tuple[int, int]], masks: list[int]) -> bool:
    """Does every mask induce a path (connected, max degree 2) in the tree?"""
    for mask in masks:
        k = mask.bit_count()
        if k <= 1:
            continue
        cnt = 0
        deg = {}
        ok = True
        for a, b in edges:
            if (mask >> a) & 1 and (mask >> b) & 1:
                cnt += 1
                da = deg.get(a, 0) + 1
                db = deg.get(b, 0) + 1
                if da > 2 or db > 2:
                    ok = False
                    break
                deg[a] = da
                deg[b] = db
        if not ok or cnt != k - 1:
            return False
    return True


def first_path_tree(c: int, masks: list[int]) -> list[tuple[int, int]] | None:
    """First labeled tree on c nodes (Pruefer lexicographic order) where every
    mask induces a path, or None when no labeled tree works."""
    if c <= 1:
        return []
    if c == 2:
        return [(0, 1)]
    seq = [0] * (c - 2)
    while True:
        edges = decode_pruefer(seq, c)
        if _all_paths(edges, masks):
            return edges
        i = c - 3
        while i >= 0 and seq[i] == c - 1:
            seq[i] = 0
            i -= 1
        if i < 0:
            return None
        seq[i] += 1
        for j in range(i + 1, c - 2):
            seq[j] = 0
