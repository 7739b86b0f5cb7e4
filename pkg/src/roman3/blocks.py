"""
Blocks, cut vertices, the cut-tree and the end-block processing order.
"""

from collections import Counter
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, Optional
import heapq
import logging
import random

import networkx as nx

from roman3.graph import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks are numbered by (smallest vertex, sorted vertex tuple)."""

    n: int
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    block_of_edge: Mapping[tuple[int, int], int]

    def blocks_of_vertex(self, v: int) -> list[int]:
        return [i for i, block in enumerate(self.blocks) if v in block]


@dataclass(frozen=True)
class CutTree:
    """Bipartite forest on block nodes ("B", i) and cut-vertex nodes ("c", v)."""

    decomposition: BlockDecomposition
    tree: nx.Graph
    component_count: int

    @property
    def connected(self) -> bool:
        return self.component_count <= 1

    @property
    def is_forest(self) -> bool:
        return not self.connected

    @property
    def node_count(self) -> int:
        return self.tree.number_of_nodes()

    def cuts_of_block(self, block: int) -> list[int]:
        return sorted(v for _, v in self.tree.neighbors(("B", block)))

    def blocks_at_cut(self, cut: int) -> list[int]:
        return sorted(i for _, i in self.tree.neighbors(("c", cut)))

    def component_of_block(self, block: int) -> frozenset[int]:
        """Block ids in the same tree component as block."""
        nodes = nx.node_connected_component(self.tree, ("B", block))
        return frozenset(i for kind, i in nodes if kind == "B")


def decompose(g: Graph) -> BlockDecomposition:
    """Biconnected components of g; isolated vertices become singleton blocks."""
    nx_graph = g.to_networkx()
    raw: list[tuple[frozenset[int], list[tuple[int, int]]]] = []
    for component_edges in nx.biconnected_component_edges(nx_graph):
        normalized = [(u, v) if u < v else (v, u) for u, v in component_edges]
        vertices = frozenset(x for edge in normalized for x in edge)
        raw.append((vertices, normalized))
    for v in g.vertices():
        if g.degree(v) == 0:
            raw.append((frozenset((v,)), []))
    raw.sort(key=lambda item: (min(item[0]), sorted(item[0])))

    block_of_edge: dict[tuple[int, int], int] = {}
    for index, (_, edges) in enumerate(raw):
        for edge in edges:
            block_of_edge[edge] = index
    membership = Counter(v for vertices, _ in raw for v in vertices)
    cut_vertices = frozenset(v for v, count in membership.items() if count >= 2)
    return BlockDecomposition(
        g.n,
        tuple(vertices for vertices, _ in raw),
        cut_vertices,
        MappingProxyType(block_of_edge),
    )


def build_cut_tree(dec: BlockDecomposition) -> CutTree:
    tree = nx.Graph()
    tree.add_nodes_from(("B", i) for i in range(len(dec.blocks)))
    tree.add_nodes_from(("c", v) for v in sorted(dec.cut_vertices))
    for i, block in enumerate(dec.blocks):
        for v in sorted(block & dec.cut_vertices):
            tree.add_edge(("B", i), ("c", v))
    components = nx.number_connected_components(tree) if tree.number_of_nodes() else 0
    if components > 1:
        logger.debug(f"cut-tree is a forest with {components} components")
    return CutTree(dec, tree, components)


def non_clique_blocks(g: Graph, dec: BlockDecomposition) -> list[frozenset[int]]:
    edge_counts = Counter(dec.block_of_edge.values())
    return [
        block
        for i, block in enumerate(dec.blocks)
        if edge_counts[i] != len(block) * (len(block) - 1) // 2
    ]


def is_block_graph(g: Graph, dec: BlockDecomposition) -> bool:
    """True when every block induces a clique."""
    return not non_clique_blocks(g, dec)


def end_block_order(
    t: CutTree, rng: Optional[random.Random] = None
) -> list[tuple[int, Optional[int]]]:
    """
    Peel end blocks off the cut-tree until every component is consumed.

    Each entry is (block id, anchor) where the anchor is the only cut vertex the
    block still shares with the remaining graph; the last block of each
    component has anchor None. Simultaneously available end blocks are taken in
    block-id order, or drawn with rng when one is given.
    """
    dec = t.decomposition
    remaining_at: dict[int, set[int]] = {c: set(t.blocks_at_cut(c)) for c in dec.cut_vertices}
    live_cuts: list[set[int]] = [set(t.cuts_of_block(i)) for i in range(len(dec.blocks))]

    available: list[int] = []
    queued: set[int] = set()

    def offer(block: int) -> None:
        if block not in queued:
            queued.add(block)
            if rng is None:
                heapq.heappush(available, block)
            else:
                available.append(block)

    def take() -> int:
        if rng is None:
            return heapq.heappop(available)
        return available.pop(rng.randrange(len(available)))

    for i, cuts in enumerate(live_cuts):
        if len(cuts) <= 1:
            offer(i)

    order: list[tuple[int, Optional[int]]] = []
    while available:
        block = take()
        cuts = live_cuts[block]
        if not cuts:
            order.append((block, None))
            continue
        (anchor,) = cuts
        order.append((block, anchor))
        remaining_at[anchor].discard(block)
        if len(remaining_at[anchor]) == 1:
            (last,) = remaining_at[anchor]
            live_cuts[last].discard(anchor)
            if len(live_cuts[last]) <= 1:
                offer(last)
    return order
