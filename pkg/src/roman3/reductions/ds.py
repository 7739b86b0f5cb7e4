"""
Dominating Set with parameter k to Roman {3}-domination with target 12k.

For a source graph on n vertices (after padding k to a multiple of three with
isolated vertices) the reduced graph holds, with copies i in 0..2 and slots
j in 0..k-1:

    A_i        vertex i*n + u                    three copies of the source
    B_i^j      vertex 3n + (i*k + j)*n + v       3k further copies
    x, y, z    vertex 3n + 3kn + 3(i*k + j) + 0, 1, 2
"""

from dataclasses import dataclass
from typing import Iterable
import logging

from roman3.errors import (
    GraphError,
    NotDominatingError,
    ReductionError,
    WitnessStructureError,
)
from roman3.graph import Graph, Labeling, build_graph, verify_labeling
from roman3.reductions.roles import Role, role_counts

logger = logging.getLogger(__name__)

COPIES = 3


@dataclass(frozen=True)
class DSReduction:
    graph: Graph
    roles: tuple[Role, ...]
    source: Graph
    n_original: int
    k_original: int
    k_effective: int
    target: int

    @property
    def n(self) -> int:
        return self.source.n

    @property
    def padding_vertices(self) -> range:
        return range(self.n_original, self.n)

    def a_vertex(self, i: int, u: int) -> int:
        return i * self.n + u

    def b_vertex(self, i: int, j: int, v: int) -> int:
        return COPIES * self.n + (i * self.k_effective + j) * self.n + v

    def _gadget(self, i: int, j: int) -> int:
        return COPIES * self.n + COPIES * self.k_effective * self.n + COPIES * (i * self.k_effective + j)

    def x_vertex(self, i: int, j: int) -> int:
        return self._gadget(i, j)

    def y_vertex(self, i: int, j: int) -> int:
        return self._gadget(i, j) + 1

    def z_vertex(self, i: int, j: int) -> int:
        return self._gadget(i, j) + 2

    @property
    def counts(self) -> dict[str, int]:
        return role_counts(self.roles)

    @property
    def padding(self) -> dict[str, int]:
        return {"vertices": self.n - self.n_original, "k": self.k_effective - self.k_original}


def ds_to_r3d(g: Graph, k: int) -> DSReduction:
    if k < 1:
        raise GraphError(f"k must be at least 1, got {k}")
    pad = (-k) % COPIES
    if pad:
        logger.warning(f"k={k} is not a multiple of 3, adding {pad} isolated vertices")
    source = build_graph(g.n + pad, g.edges)
    n, k_eff = source.n, k + pad

    roles: list[Role] = []
    for i in range(COPIES):
        roles.extend(Role("A", (i, u), u >= g.n) for u in range(n))
    for i in range(COPIES):
        for j in range(k_eff):
            roles.extend(Role("B", (i, j, v), v >= g.n) for v in range(n))
    for i in range(COPIES):
        for j in range(k_eff):
            roles.extend(Role(kind, (i, j)) for kind in ("x", "y", "z"))

    red = DSReduction(build_graph(0, []), tuple(roles), source, g.n, k, k_eff, 12 * k_eff)
    edges: list[tuple[int, int]] = []
    for i in range(COPIES):
        for i2 in range(COPIES):
            edges.extend((red.a_vertex(i, u), red.a_vertex(i2, v)) for u, v in source.edges)
            if i < i2:
                edges.extend((red.a_vertex(i, u), red.a_vertex(i2, u)) for u in range(n))
        for j in range(k_eff):
            x = red.x_vertex(i, j)
            edges.append((x, red.y_vertex(i, j)))
            edges.extend((x, red.b_vertex(i, j, v)) for v in range(n))
            for v in range(n):
                b = red.b_vertex(i, j, v)
                edges.append((red.a_vertex(i, v), b))
                edges.extend((red.a_vertex(i, u), b) for u in source.adjacency[v])
        for group in range(0, k_eff, COPIES):
            for j in range(group, group + COPIES):
                edges.extend((red.y_vertex(i, j), red.z_vertex(i, j2)) for j2 in range(group, group + COPIES))

    graph = build_graph(len(roles), edges)
    red = DSReduction(graph, red.roles, source, g.n, k, k_eff, red.target)
    defects = check_ds_structure(red)
    assert not defects, defects
    logger.debug(f"ds reduction built {graph.n} vertices and {graph.m} edges, target {red.target}")
    return red


def check_ds_structure(red: DSReduction) -> list[str]:
    """Every structural invariant of the DS reduction that does not hold."""
    g, n, k = red.graph, red.n, red.k_effective
    defects: list[str] = []
    expected = COPIES * n + COPIES * k * n + 3 * COPIES * k
    if g.n != expected:
        defects.append(f"graph has {g.n} vertices, expected {expected}")
        return defects
    if k % COPIES:
        defects.append(f"k={k} is not a multiple of 3")
    for i in range(COPIES):
        for j in range(k):
            x, y = red.x_vertex(i, j), red.y_vertex(i, j)
            if g.degree(x) != n + 1:
                defects.append(f"{red.roles[x].tag} has degree {g.degree(x)}, expected {n + 1}")
            if not g.has_edge(x, y):
                defects.append(f"{red.roles[x].tag} is not joined to {red.roles[y].tag}")
            z = red.z_vertex(i, j)
            if g.degree(z) != 3:
                defects.append(f"{red.roles[z].tag} has degree {g.degree(z)}, expected 3")
        for i2 in range(COPIES):
            if i == i2:
                continue
            for u in range(n):
                if not g.has_edge(red.a_vertex(i, u), red.a_vertex(i2, u)):
                    defects.append(f"copies {i} and {i2} of vertex {u} are not joined")
    return defects


def complete_dominating_set(red: DSReduction, s: Iterable[int]) -> set[int]:
    """Add the isolated padding vertices, which every dominating set must contain."""
    return set(s) | set(red.padding_vertices)


def strip_padding(red: DSReduction, s: Iterable[int]) -> set[int]:
    return {u for u in s if u < red.n_original}


def first_undominated(g: Graph, s: set[int]) -> int:
    for u in g.vertices():
        if u not in s and not g.neighbor_set(u) & s:
            return u
    return -1


def ds_witness_to_labeling(red: DSReduction, s: Iterable[int]) -> Labeling:
    """1 on the three copies of S and on every y, 2 on every x; weight 3|S| + 9k."""
    chosen = complete_dominating_set(red, s)
    if any(not 0 <= u < red.n for u in chosen):
        raise ReductionError(f"dominating set {sorted(chosen)} has a vertex outside the source graph")
    missing = first_undominated(red.source, chosen)
    if missing >= 0:
        raise NotDominatingError(missing)
    if len(chosen) > red.k_effective:
        raise ReductionError(
            f"dominating set has {len(chosen) - len(red.padding_vertices)} vertices, more than k={red.k_original}"
        )
    labels = [0] * red.graph.n
    for i in range(COPIES):
        for u in chosen:
            labels[red.a_vertex(i, u)] = 1
        for j in range(red.k_effective):
            labels[red.x_vertex(i, j)] = 2
            labels[red.y_vertex(i, j)] = 1
    return Labeling(tuple(labels))


def ds_witness_conditions(red: DSReduction, f: Labeling) -> list[str]:
    """Gadget conditions a labeling of weight at most 12k has to meet, listed when they fail."""
    failed = []
    for i in range(COPIES):
        for j in range(red.k_effective):
            for vertex, expected in ((red.x_vertex(i, j), 2), (red.y_vertex(i, j), 1), (red.z_vertex(i, j), 0)):
                if f[vertex] != expected:
                    failed.append(f"{red.roles[vertex].tag} labelled {f[vertex]}, expected {expected}")
    return failed


def extract_ds_from_labeling(red: DSReduction, f: Labeling) -> set[int]:
    """Project the positive labels of copy A_0 back onto the padded source graph."""
    report = verify_labeling(red.graph, f)
    if not report.valid:
        raise ReductionError(f"labeling is not valid, {len(report.violations)} vertices are not dominated")
    if f.weight > red.target:
        raise ReductionError(f"labeling has weight {f.weight}, above the target {red.target}")
    s = {u for u in range(red.n) if f[red.a_vertex(0, u)] >= 1}
    missing = first_undominated(red.source, s)
    if missing >= 0:
        raise WitnessStructureError(
            "positive vertices of the first copy do not dominate the source graph",
            {"undominated": missing, "conditions": ds_witness_conditions(red, f)},
        )
    return s
