import networkx as nx
import pytest

from roman3.graph import Graph, build_graph, from_networkx
from roman3.reductions.x3c import X3CInstance

# triangle, pendant edge and K4 at cut vertex 2, pendant edge at cut vertex 6
SAMPLE_EDGES = [
    (0, 1), (0, 2), (1, 2),
    (2, 3),
    (2, 4), (2, 5), (2, 6), (4, 5), (4, 6), (5, 6),
    (6, 7),
]

# triples 0 and 2 form the only exact cover
SAMPLE_TRIPLES = [(0, 1, 2), (0, 1, 3), (3, 4, 5), (1, 4, 5)]
SAMPLE_COVER = {0, 2}


def path(n: int) -> Graph:
    return from_networkx(nx.path_graph(n))


def cycle(n: int) -> Graph:
    return from_networkx(nx.cycle_graph(n))


def complete(n: int) -> Graph:
    return from_networkx(nx.complete_graph(n))


def star(leaves: int) -> Graph:
    return from_networkx(nx.star_graph(leaves))


def spider(legs: int, length: int) -> Graph:
    edges = []
    for leg in range(legs):
        previous = 0
        for step in range(length):
            v = 1 + leg * length + step
            edges.append((previous, v))
            previous = v
    return build_graph(1 + legs * length, edges)


@pytest.fixture
def sample_graph() -> Graph:
    return build_graph(8, SAMPLE_EDGES)


@pytest.fixture
def sample_x3c() -> X3CInstance:
    return X3CInstance.of(6, SAMPLE_TRIPLES)


# gamma_R3 of small named graphs, confirmed by enumeration
KNOWN_VALUES = [
    ("K1", complete(1), 2),
    ("P2", path(2), 3),
    ("P3", path(3), 3),
    ("K3", complete(3), 3),
    ("C4", cycle(4), 4),
    ("K1,4", star(4), 3),
    ("K5", complete(5), 3),
]
