"""
Graph and labeling representation plus the Roman {3}-domination definitions.

Vertices are dense integer ids 0..n-1. External names only exist in the file
formats.
"""

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import networkx as nx

from roman3.errors import GraphError, LabelingError

LABELS = (0, 1, 2, 3)

# Open-neighbourhood sum a vertex needs for each label; labels 2 and 3 need nothing.
REQUIRED_SUM = {0: 3, 1: 2}


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    _neighbor_sets: tuple[frozenset[int], ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adjacency[u]

    def neighbor_set(self, u: int) -> frozenset[int]:
        return self._neighbor_sets[u]

    def closed_neighborhood(self, u: int) -> frozenset[int]:
        return self._neighbor_sets[u] | {u}

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbor_sets[u]

    def to_networkx(self) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.edges)
        return nx_graph


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph, collapsing duplicate pairs and normalizing each edge to u < v."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    edge_set: set[tuple[int, int]] = set()
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) is not allowed")
        edge_set.add((u, v) if u < v else (v, u))
    edges = tuple(sorted(edge_set))
    buckets: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        buckets[u].append(v)
        buckets[v].append(u)
    adjacency = tuple(tuple(sorted(b)) for b in buckets)
    return Graph(n, edges, adjacency, tuple(frozenset(b) for b in adjacency))


def from_networkx(nx_graph: nx.Graph) -> Graph:
    """Convert a networkx graph whose nodes are 0..n-1 (or relabel them in sorted order)."""
    nodes = sorted(nx_graph.nodes)
    index = {v: i for i, v in enumerate(nodes)}
    return build_graph(len(nodes), ((index[u], index[v]) for u, v in nx_graph.edges))


def add_edges(g: Graph, extra: Iterable[tuple[int, int]]) -> Graph:
    return build_graph(g.n, list(g.edges) + list(extra))


def disjoint_union(*graphs: Graph) -> Graph:
    """Place the graphs side by side, shifting vertex ids in argument order."""
    offset = 0
    edges: list[tuple[int, int]] = []
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return build_graph(offset, edges)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return G[vertices] renumbered 0..k-1 and the map new id -> old id."""
    order = tuple(sorted(set(vertices)))
    index = {v: i for i, v in enumerate(order)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return build_graph(len(order), edges), order


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    return sorted((sorted(c) for c in nx.connected_components(g.to_networkx())), key=lambda c: c[0])


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return all(g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])


def is_independent_set(g: Graph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    return all(not (g.neighbor_set(u) & vs) for u in vs)


def is_split_partition(g: Graph, clique: Iterable[int], independent: Iterable[int]) -> bool:
    """True when clique and independent partition V into a clique and an independent set."""
    clique, independent = set(clique), set(independent)
    if clique & independent or len(clique) + len(independent) != g.n:
        return False
    return is_clique(g, clique) and is_independent_set(g, independent)


def is_dominating_set(g: Graph, vertices: Iterable[int]) -> bool:
    s = set(vertices)
    return all(u in s or g.neighbor_set(u) & s for u in g.vertices())


@dataclass(frozen=True)
class Labeling:
    """Total function vertex -> {0, 1, 2, 3}."""

    labels: tuple[int, ...]

    def __post_init__(self):
        for v, label in enumerate(self.labels):
            if label not in LABELS:
                raise LabelingError(f"vertex {v} has label {label}, expected one of {LABELS}")

    @classmethod
    def of(cls, labels: Sequence[int]) -> "Labeling":
        return cls(tuple(int(x) for x in labels))

    @classmethod
    def zeros(cls, n: int) -> "Labeling":
        return cls((0,) * n)

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    def with_label(self, v: int, label: int) -> "Labeling":
        labels = list(self.labels)
        labels[v] = label
        return Labeling(tuple(labels))

    def support(self) -> frozenset[int]:
        """Vertices with a positive label."""
        return frozenset(v for v, label in enumerate(self.labels) if label > 0)

    @property
    def weight(self) -> int:
        return labeling_weight(self)


class Violation(NamedTuple):
    vertex: int
    required: int
    actual: int


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    violations: tuple[Violation, ...]

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [v._asdict() for v in self.violations],
        }


def _check_length(g: Graph, f: Labeling) -> None:
    if len(f) != g.n:
        raise LabelingError(f"labeling has {len(f)} entries but the graph has {g.n} vertices")


def open_label_sum(g: Graph, f: Labeling, u: int) -> int:
    """Sum of f over N(u)."""
    labels = f.labels
    return sum(labels[v] for v in g.adjacency[u])


def closed_label_sum(g: Graph, f: Labeling, u: int) -> int:
    """Sum of f over N[u] (the labelSum of u)."""
    if not 0 <= u < g.n:
        raise GraphError(f"vertex {u} is outside 0..{g.n - 1}")
    _check_length(g, f)
    return f[u] + open_label_sum(g, f, u)


def verify_labeling(g: Graph, f: Labeling) -> VerificationReport:
    """Check the Roman {3}-domination constraint at every vertex and report every failure."""
    _check_length(g, f)
    violations = []
    for u in g.vertices():
        required = REQUIRED_SUM.get(f[u])
        if required is None:
            continue
        actual = open_label_sum(g, f, u)
        if actual < required:
            violations.append(Violation(u, required, actual))
    return VerificationReport(not violations, tuple(violations))


def labeling_weight(f: Labeling) -> int:
    return sum(f.labels)
