"""
Exact 3-Cover to Roman {3}-domination on split graphs.

Vertex layout for a (padded) instance with 3q elements and t triples:

    X  0 .. 3q-1              one vertex per element
    C  next t                 one vertex per triple
    A  next 3q, B next 3q     copies of X
    Y  next 10q, Z next 10q   gadget vertices

A is split into consecutive groups of six; group g is paired with Z vertices
20g .. 20g+19, and Z vertex 20g+r is joined to the r-th 3-subset of the group in
lexicographic order. B and Y are wired the same way. A, B and C form a clique.
"""

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional
import logging

from roman3.errors import (
    InstanceError,
    NotExactCoverError,
    ReductionError,
    WitnessStructureError,
)
from roman3.graph import (
    Graph,
    Labeling,
    build_graph,
    is_clique,
    is_independent_set,
    verify_labeling,
)
from roman3.reductions.roles import Role, role_counts

logger = logging.getLogger(__name__)

GROUP_SIZE = 6
GROUP_TRIPLES = tuple(combinations(range(GROUP_SIZE), 3))


@dataclass(frozen=True)
class X3CInstance:
    """Universe 0..universe_size-1 and a list of 3-element triples; planted is an optional known cover."""

    universe_size: int
    triples: tuple[tuple[int, int, int], ...]
    planted: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if self.universe_size <= 0 or self.universe_size % 3:
            raise InstanceError(f"universe size must be a positive multiple of 3, got {self.universe_size}")
        for j, triple in enumerate(self.triples):
            if len(triple) != 3 or len(set(triple)) != 3:
                raise InstanceError(f"triple {j} {triple} does not have three distinct elements")
            if not all(0 <= x < self.universe_size for x in triple):
                raise InstanceError(f"triple {j} {triple} leaves the universe 0..{self.universe_size - 1}")
        if self.planted is not None and any(not 0 <= j < len(self.triples) for j in self.planted):
            raise InstanceError(f"planted cover {self.planted} refers to a missing triple")

    @classmethod
    def of(cls, universe_size: int, triples: Iterable[Iterable[int]], planted=None) -> "X3CInstance":
        normalized = tuple(tuple(sorted(int(x) for x in triple)) for triple in triples)
        return cls(universe_size, normalized, tuple(planted) if planted is not None else None)

    @property
    def q(self) -> int:
        return self.universe_size // 3

    @property
    def t(self) -> int:
        return len(self.triples)


def cover_defects(inst: X3CInstance, cover: Iterable[int]) -> tuple[list[int], list[int]]:
    """Elements covered zero times and elements covered more than once."""
    counts = Counter(x for j in cover for x in inst.triples[j])
    uncovered = [x for x in range(inst.universe_size) if counts[x] == 0]
    doubly_covered = [x for x in range(inst.universe_size) if counts[x] > 1]
    return uncovered, doubly_covered


def is_exact_cover(inst: X3CInstance, cover: Iterable[int]) -> bool:
    uncovered, doubly_covered = cover_defects(inst, cover)
    return not uncovered and not doubly_covered


def pad_instance(inst: X3CInstance) -> tuple[X3CInstance, bool]:
    """Append three dummy elements and their triple when q is odd."""
    if inst.q % 2 == 0:
        return inst, False
    n = inst.universe_size
    padded = X3CInstance(n + 3, inst.triples + ((n, n + 1, n + 2),), inst.planted)
    logger.warning(f"q={inst.q} is odd, padded the universe to {padded.universe_size} elements")
    return padded, True


@dataclass(frozen=True)
class SplitReduction:
    graph: Graph
    roles: tuple[Role, ...]
    instance: X3CInstance
    original: X3CInstance
    padded: bool
    target: int
    offsets: dict[str, int] = field(repr=False)

    @property
    def q_effective(self) -> int:
        return self.instance.q

    def x_vertex(self, i: int) -> int:
        return self.offsets["X"] + i

    def c_vertex(self, j: int) -> int:
        return self.offsets["C"] + j

    def a_vertex(self, i: int) -> int:
        return self.offsets["A"] + i

    def b_vertex(self, i: int) -> int:
        return self.offsets["B"] + i

    def y_vertex(self, i: int) -> int:
        return self.offsets["Y"] + i

    def z_vertex(self, i: int) -> int:
        return self.offsets["Z"] + i

    def vertices(self, kind: str) -> range:
        start = self.offsets[kind]
        return range(start, start + self.counts[kind])

    @property
    def counts(self) -> dict[str, int]:
        return role_counts(self.roles)

    @property
    def padding(self) -> dict[str, int]:
        return {"elements": 3 if self.padded else 0, "triples": 1 if self.padded else 0}


def x3c_to_split(inst: X3CInstance) -> SplitReduction:
    original = inst
    inst, padded = pad_instance(inst)
    q, t, size = inst.q, inst.t, inst.universe_size
    gadget = 10 * q

    offsets: dict[str, int] = {}
    roles: list[Role] = []
    pad_from = original.universe_size
    for kind, count in (("X", size), ("C", t), ("A", size), ("B", size), ("Y", gadget), ("Z", gadget)):
        offsets[kind] = len(roles)
        for i in range(count):
            if kind in "XAB":
                is_pad = i >= pad_from
            elif kind == "C":
                is_pad = padded and i == t - 1
            else:
                is_pad = False
            roles.append(Role(kind, (i,), is_pad))

    edges: list[tuple[int, int]] = []
    for j, triple in enumerate(inst.triples):
        edges.extend((offsets["X"] + x, offsets["C"] + j) for x in triple)
    for i in range(size):
        edges.append((offsets["X"] + i, offsets["A"] + i))
        edges.append((offsets["X"] + i, offsets["B"] + i))

    for copy, gadget_kind in (("A", "Z"), ("B", "Y")):
        for group in range(size // GROUP_SIZE):
            for r, triple in enumerate(GROUP_TRIPLES):
                w = offsets[gadget_kind] + group * len(GROUP_TRIPLES) + r
                edges.extend((offsets[copy] + group * GROUP_SIZE + i, w) for i in triple)

    clique = list(range(offsets["C"], offsets["C"] + t)) + list(
        range(offsets["A"], offsets["A"] + 2 * size)
    )
    edges.extend(combinations(clique, 2))

    graph = build_graph(len(roles), edges)
    red = SplitReduction(graph, tuple(roles), inst, original, padded, 7 * q, offsets)
    defects = check_split_structure(red)
    assert not defects, defects
    logger.debug(f"x3c reduction built {graph.n} vertices and {graph.m} edges, target {red.target}")
    return red


def check_split_structure(red: SplitReduction) -> list[str]:
    """Every structural invariant of the split reduction that does not hold."""
    g, inst = red.graph, red.instance
    q, size = inst.q, inst.universe_size
    defects: list[str] = []
    expected = {"X": size, "C": inst.t, "A": size, "B": size, "Y": 10 * q, "Z": 10 * q}
    counts = red.counts
    for kind, count in expected.items():
        if counts.get(kind, 0) != count:
            defects.append(f"{kind} has {counts.get(kind, 0)} vertices, expected {count}")
    if defects:
        return defects

    clique = [*red.vertices("A"), *red.vertices("B"), *red.vertices("C")]
    independent = [*red.vertices("X"), *red.vertices("Y"), *red.vertices("Z")]
    if not is_clique(g, clique):
        defects.append("A, B and C do not induce a clique")
    if not is_independent_set(g, independent):
        defects.append("X, Y and Z do not induce an independent set")

    for gadget_kind, copy in (("Z", "A"), ("Y", "B")):
        copy_vertices = set(red.vertices(copy))
        for w in red.vertices(gadget_kind):
            if g.degree(w) != 3 or not g.neighbor_set(w) <= copy_vertices:
                defects.append(f"{red.roles[w].tag} is not joined to exactly three {copy} vertices")
        gadget_vertices = set(red.vertices(gadget_kind))
        for v in copy_vertices:
            if len(g.neighbor_set(v) & gadget_vertices) != 10:
                defects.append(f"{red.roles[v].tag} does not have ten {gadget_kind} neighbours")

    incident = Counter(x for triple in inst.triples for x in triple)
    for i in range(size):
        x = red.x_vertex(i)
        if not {red.a_vertex(i), red.b_vertex(i)} <= g.neighbor_set(x):
            defects.append(f"{red.roles[x].tag} is not joined to its A and B copies")
        if g.degree(x) != 2 + incident[i]:
            defects.append(f"{red.roles[x].tag} has degree {g.degree(x)}, expected {2 + incident[i]}")
    return defects


def complete_cover(red: SplitReduction, cover: Iterable[int]) -> set[int]:
    """Add the dummy triple when the instance was padded."""
    completed = set(cover)
    if red.padded:
        completed.add(red.instance.t - 1)
    return completed


def strip_padding(red: SplitReduction, cover: Iterable[int]) -> set[int]:
    return {j for j in cover if j < red.original.t}


def x3c_witness_to_labeling(red: SplitReduction, cover: Iterable[int]) -> Labeling:
    """Label A, B and the chosen triples with 1; the result has weight 7q."""
    chosen = complete_cover(red, cover)
    if any(not 0 <= j < red.instance.t for j in chosen):
        raise ReductionError(f"cover {sorted(chosen)} refers to a missing triple")
    uncovered, doubly_covered = cover_defects(red.instance, chosen)
    if uncovered or doubly_covered:
        raise NotExactCoverError(uncovered, doubly_covered)
    labels = [0] * red.graph.n
    for v in (*red.vertices("A"), *red.vertices("B")):
        labels[v] = 1
    for j in chosen:
        labels[red.c_vertex(j)] = 1
    return Labeling(tuple(labels))


def extract_cover_from_labeling(red: SplitReduction, f: Labeling) -> set[int]:
    """
    Read the cover off the C vertices with a positive label.

    The labeling must be valid and within the target weight; the cover is
    returned in the padded index space (see strip_padding).
    """
    report = verify_labeling(red.graph, f)
    if not report.valid:
        raise ReductionError(f"labeling is not valid, {len(report.violations)} vertices are not dominated")
    if f.weight > red.target:
        raise ReductionError(f"labeling has weight {f.weight}, above the target {red.target}")

    off_label = [v for v in (*red.vertices("A"), *red.vertices("B")) if f[v] != 1]
    if off_label:
        raise WitnessStructureError(
            "some A or B vertex is not labelled 1", [red.roles[v].tag for v in off_label]
        )
    cover = {j for j in range(red.instance.t) if f[red.c_vertex(j)] >= 1}
    uncovered, doubly_covered = cover_defects(red.instance, cover)
    if uncovered or doubly_covered:
        raise WitnessStructureError(
            "the positive C vertices do not form an exact cover",
            {"uncovered": uncovered, "doubly_covered": doubly_covered},
        )
    return cover
