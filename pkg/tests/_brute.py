"""Small reference implementations the tests cross-check against.

These are deliberately naive and independent of the library internals.
"""

import itertools


def chordal_by_elimination(g) -> bool:
    """Repeatedly strip simplicial vertices; chordal iff everything strips."""
    adj = {v: set(g.adj[v]) for v in range(g.n)}
    alive = set(range(g.n))
    changed = True
    while alive and changed:
        changed = False
        for v in sorted(alive):
            nb = adj[v] & alive
            if all(u in adj[w] for u, w in itertools.combinations(sorted(nb), 2)):
                alive.discard(v)
                changed = True
                break
    return not alive


def maximal_cliques_by_enumeration(g):
    """All maximal cliques by subset enumeration; usable up to n around 8."""
    found = []
    for r in range(1, g.n + 1):
        for sub in itertools.combinations(range(g.n), r):
            if all(g.has_edge(u, v) for u, v in itertools.combinations(sub, 2)):
                found.append(set(sub))
    return sorted(
        tuple(sorted(c)) for c in found if not any(c < d for d in found)
    )


def pruefer_decode_reference(seq, c):
    """Textbook decoding: repeatedly join the smallest remaining leaf."""
    degree = [1] * c
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(c) if degree[v] == 1)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [w for w in range(c) if degree[w] == 1]
    edges.append((u, v))
    return sorted(edges)


def strong_colorable_by_enumeration(dec) -> bool:
    """Try every parts coloring directly against the two defining conditions."""
    from pathgraph.attach import antipodal

    k = len(dec.gammas)
    pairs = [
        (i, j)
        for i in range(k)
        for j in range(i + 1, k)
        if antipodal(dec.gammas[i], dec.gammas[j])
    ]
    groups = [dec.neighbor_map[v] for v in dec.q]
    for f in itertools.product(range(k), repeat=k):
        if any(f[i] == f[j] for i, j in pairs):
            continue
        if any(len({f[g] for g in grp}) > 2 for grp in groups):
            continue
        return True
    return False
