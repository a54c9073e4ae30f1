import pytest

from pathgraph.generate import gen_chordal, k4_hub
from pathgraph.graphs import Graph

WORKED8_EDGES = [
    (0, 1), (0, 2), (1, 2), (1, 4), (2, 4), (2, 3), (3, 4),
    (1, 6), (4, 6), (1, 5), (5, 6), (4, 7), (6, 7),
]
WORKED8_LABELS = tuple("abcdefgh")


def make_worked8() -> Graph:
    """Worked 8-vertex path graph; cliques abc, bce, beg, bfg, cde, egh."""
    return Graph.from_edges(8, WORKED8_EDGES, labels=WORKED8_LABELS)


@pytest.fixture
def worked8() -> Graph:
    return make_worked8()


@pytest.fixture
def k4hub() -> Graph:
    return k4_hub()


@pytest.fixture(scope="session")
def chordal_corpus():
    """Seeded corpus shared by the relation, coloring and recognition tests."""
    return [(seed, gen_chordal(4 + seed % 9, seed)) for seed in range(300)]
