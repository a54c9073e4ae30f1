import itertools

import pytest
from hypothesis import given, settings, strategies as st

import _brute
from pathgraph.chordal import (
    CliqueTree,
    EliminationOrder,
    HoleCertificate,
    clique_tree,
    is_chordal,
    is_clique_path_tree,
    is_valid_clique_tree,
    maximal_cliques,
    peo_or_hole,
)
from pathgraph.errors import InputError, PreconditionError
from pathgraph.generate import gen_chordal
from pathgraph.graphs import Graph


@st.composite
def small_graphs(draw, max_n=7):
    n = draw(st.integers(2, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return Graph.from_edges(n, edges)


@settings(max_examples=300, deadline=None)
@given(small_graphs())
def test_chordality_matches_simplicial_elimination(g):
    assert is_chordal(g) == _brute.chordal_by_elimination(g)


@settings(max_examples=300, deadline=None)
@given(small_graphs())
def test_result_is_peo_or_valid_hole(g):
    res = peo_or_hole(g)
    if isinstance(res, EliminationOrder):
        order = res.order
        assert sorted(order) == list(range(g.n))
        pos = {v: i for i, v in enumerate(order)}
        for v in order:
            later = [u for u in g.adj[v] if pos[u] > pos[v]]
            for a, b in itertools.combinations(later, 2):
                assert g.has_edge(a, b)
    else:
        cyc = res.cycle
        k = len(cyc)
        assert k >= 4 and len(set(cyc)) == k
        for i in range(k):
            assert g.has_edge(cyc[i], cyc[(i + 1) % k])
        for i in range(k):
            for j in range(i + 2, k):
                if (i, j) != (0, k - 1):
                    assert not g.has_edge(cyc[i], cyc[j])
        # canonical form: smallest vertex first, smaller second element
        assert cyc[0] == min(cyc)
        assert cyc[1] <= cyc[-1]


def test_cycle_holes_come_out_canonical():
    c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert peo_or_hole(c4) == HoleCertificate((0, 1, 2, 3))
    c5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert peo_or_hole(c5).cycle == (0, 1, 2, 3, 4)


def test_worked8_maximal_cliques(worked8):
    assert maximal_cliques(worked8) == [
        (0, 1, 2), (1, 2, 4), (1, 4, 6), (1, 5, 6), (2, 3, 4), (4, 6, 7),
    ]


@settings(max_examples=200, deadline=None)
@given(small_graphs())
def test_maximal_cliques_match_enumeration(g):
    if not is_chordal(g):
        with pytest.raises(PreconditionError):
            maximal_cliques(g)
        return
    assert maximal_cliques(g) == _brute.maximal_cliques_by_enumeration(g)


def test_clique_tree_is_valid_on_corpus(chordal_corpus):
    for _, g in chordal_corpus[:150]:
        t = clique_tree(g)
        assert is_valid_clique_tree(g, t)


def test_is_valid_clique_tree_rejects_wrong_trees(worked8):
    t = clique_tree(worked8)
    c = len(t.cliques)
    # not a tree: drop an edge
    some = next(iter(t.edges))
    assert not is_valid_clique_tree(worked8, CliqueTree(t.cliques, t.edges - {some}))
    # tree on the wrong clique list
    assert not is_valid_clique_tree(worked8, CliqueTree(t.cliques[:-1], t.edges))
    # spanning tree without the induced-subtree property: a path in clique order
    chain = frozenset((i, i + 1) for i in range(c - 1))
    assert not is_valid_clique_tree(worked8, CliqueTree(t.cliques, chain))


def test_clique_tree_requires_connected():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(PreconditionError):
        clique_tree(g)


def test_k4hub_clique_tree_is_not_a_path_tree(k4hub):
    # the hub vertex sits in all four cliques, forcing a degree-3 star
    t = clique_tree(k4hub)
    assert is_valid_clique_tree(k4hub, t)
    assert not is_clique_path_tree(k4hub, t)


def test_is_clique_path_tree_accepts_worked8_tree(worked8):
    from pathgraph.oracle import oracle_clique_path_tree

    t = oracle_clique_path_tree(worked8)
    assert t is not None
    assert is_clique_path_tree(worked8, t)


def test_is_clique_path_tree_wants_canonical_cliques(worked8):
    t = clique_tree(worked8)
    with pytest.raises(InputError):
        is_clique_path_tree(worked8, CliqueTree(t.cliques[::-1], t.edges))


def test_single_clique_graph():
    g = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
    assert maximal_cliques(g) == [(0, 1, 2)]
    t = clique_tree(g)
    assert t.cliques == ((0, 1, 2),) and t.edges == frozenset()
    assert is_clique_path_tree(g, t)


def test_gen_chordal_outputs_are_chordal():
    for seed in range(60):
        g = gen_chordal(4 + seed % 9, seed)
        assert isinstance(peo_or_hole(g), EliminationOrder)
