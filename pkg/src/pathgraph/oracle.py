"""Independent brute-force oracles: exhaustive clique-path-tree search over all
labeled trees, and exhaustive strong-coloring search. Both are guarded."""

from __future__ import annotations

from . import kernels
from .attach import AttachednessGraph
from .chordal import CliqueTree, is_chordal, is_clique_path_tree, maximal_cliques
from .coloring import is_strong_coloring
from .decompose import Decomposition
from .errors import GuardRefusal, InvariantError, PreconditionError
from .graphs import Graph, is_connected

TREE_SWEEP_MAX_CLIQUES = 9
STRONG_COLORING_MAX_CLASSES = 8


def oracle_clique_path_tree(g: Graph) -> CliqueTree | None:
    """Sweep every labeled tree on the maximal cliques (Pruefer order) and
    return the first where each vertex's cliques induce a path, else None.

    Guarded to at most 9 cliques (9^7 labeled trees).
    """
    if not is_chordal(g):
        raise PreconditionError("oracle_clique_path_tree requires a chordal graph")
    if not is_connected(g):
        raise PreconditionError("oracle_clique_path_tree requires a connected graph")
    cliques = maximal_cliques(g)
    c = len(cliques)
    if c > TREE_SWEEP_MAX_CLIQUES:
        raise GuardRefusal(
            f"{c} maximal cliques exceed the exhaustive sweep guard of "
            f"{TREE_SWEEP_MAX_CLIQUES}"
        )
    occurrence: dict[int, int] = {}
    for idx, clique in enumerate(cliques):
        for v in clique:
            occurrence[v] = occurrence.get(v, 0) | (1 << idx)
    masks = sorted(
        {mk for mk in occurrence.values() if mk.bit_count() >= 2},
        key=lambda mk: (-mk.bit_count(), mk),
    )
    edges = kernels.first_path_tree(c, masks)
    if edges is None:
        return None
    tree = CliqueTree(tuple(cliques), frozenset(edges))
    if not is_clique_path_tree(g, tree):
        raise InvariantError("swept tree fails the clique path tree check")
    return tree


def oracle_strong_coloring(
    dec: Decomposition, m: AttachednessGraph
) -> dict[int, int] | None:
    """Lexicographically first strong coloring over the classes, or None.

    Colors range over 1..s; properness on antipodal pairs plus the two-color
    bound per separator vertex are enforced during the backtracking.
    Guarded to at most 8 classes.
    """
    s = m.size
    if s > STRONG_COLORING_MAX_CLASSES:
        raise GuardRefusal(
            f"{s} classes exceed the strong-coloring guard of "
            f"{STRONG_COLORING_MAX_CLASSES}"
        )
    if s == 0:
        return {}
    earlier_antipodal = [
        [b for b in range(a) if m.is_antipodal(a, b)] for a in range(s)
    ]
    vertex_groups = [m.neighbor_map[v] for v in m.q]
    colors: dict[int, int] = {}

    def feasible(c: int, col: int) -> bool:
        if any(colors[b] == col for b in earlier_antipodal[c]):
            return False
        for group in vertex_groups:
            if c in group:
                used = {colors[x] for x in group if x in colors} | {col}
                if len(used) > 2:
                    return False
        return True

    def rec(c: int) -> bool:
        if c == s:
            return True
        for col in range(1, s + 1):
            if feasible(c, col):
                colors[c] = col
                if rec(c + 1):
                    return True
                del colors[c]
        return False

    if not rec(0):
        return None
    if not is_strong_coloring(dec, m, colors):
        raise InvariantError("oracle produced a non-strong coloring")
    return dict(colors)
