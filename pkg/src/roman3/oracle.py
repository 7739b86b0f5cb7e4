"""
Exact reference solvers: exhaustive enumeration, branch-and-bound and a small
minimum dominating set search. These never look at block structure, so they
can be used to check the block-graph DP.
"""

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import NamedTuple, Optional
import logging
import time

import networkx as nx

from roman3.errors import InstanceTooLargeError
from roman3.graph import REQUIRED_SUM, Graph, Labeling, verify_labeling
from roman3.weights import INFEASIBLE, ExtWeight

logger = logging.getLogger(__name__)

BRUTE_FORCE_LIMIT = 14
DOMINATING_SET_LIMIT = 20
STATE_LIMIT = 10

# Labels tried at each branch; large labels first reach good incumbents early.
BRANCH_LABELS = (3, 2, 1, 0)


class Outcome(str, Enum):
    EXACT = "EXACT"
    BUDGET_EXHAUSTED = "BUDGET_EXHAUSTED"


@dataclass(frozen=True)
class SearchBudget:
    """Limits for branch_and_bound; None means unlimited."""

    node_limit: Optional[int] = None
    time_limit_ms: Optional[float] = None


class Solution(NamedTuple):
    weight: int
    witness: Labeling


class SearchResult(NamedTuple):
    weight: int
    witness: Labeling
    outcome: Outcome
    nodes: int = 0

    @property
    def exact(self) -> bool:
        return self.outcome is Outcome.EXACT


def search_order(g: Graph) -> list[int]:
    """Breadth-first order over every component, smallest vertex first."""
    nx_graph = g.to_networkx()
    order: list[int] = []
    seen: set[int] = set()
    for v in g.vertices():
        if v not in seen:
            component = list(nx.bfs_tree(nx_graph, v))
            seen.update(component)
            order.extend(component)
    return order


def greedy_dominating_set(g: Graph) -> set[int]:
    """Repeatedly take the vertex that dominates the most undominated vertices."""
    undominated = set(g.vertices())
    chosen: set[int] = set()
    while undominated:
        best = max(g.vertices(), key=lambda v: (len(g.closed_neighborhood(v) & undominated), -v))
        chosen.add(best)
        undominated -= g.closed_neighborhood(best)
    return chosen


def _initial_incumbent(g: Graph) -> Labeling:
    """The cheaper of all-2 and 3 on a greedy dominating set; both are always valid."""
    all_twos = Labeling((2,) * g.n)
    dominating = greedy_dominating_set(g)
    threes = Labeling(tuple(3 if v in dominating else 0 for v in g.vertices()))
    return threes if threes.weight < all_twos.weight else all_twos


class _PartialLabeling:
    """Labels assigned so far with per-vertex open sums and unassigned-neighbour counts."""

    def __init__(self, g: Graph):
        self.g = g
        self.labels: list[int] = [-1] * g.n
        self.weight = 0
        self.assigned_sum = [0] * g.n
        self.open_slots = [g.degree(v) for v in g.vertices()]

    def assign(self, v: int, label: int) -> None:
        self.labels[v] = label
        self.weight += label
        for u in self.g.adjacency[v]:
            self.assigned_sum[u] += label
            self.open_slots[u] -= 1

    def unassign(self, v: int) -> None:
        label = self.labels[v]
        self.labels[v] = -1
        self.weight -= label
        for u in self.g.adjacency[v]:
            self.assigned_sum[u] -= label
            self.open_slots[u] += 1

    def can_satisfy(self, u: int) -> bool:
        label = self.labels[u]
        if label < 0:
            return True
        need = REQUIRED_SUM.get(label, 0)
        return self.assigned_sum[u] + 3 * self.open_slots[u] >= need

    def feasible_around(self, v: int) -> bool:
        return self.can_satisfy(v) and all(self.can_satisfy(u) for u in self.g.adjacency[v])

    def residual_demand(self, u: int) -> int:
        """Weight that unassigned vertices of N[u] still have to supply."""
        label = self.labels[u]
        if label < 0:
            return max(0, 2 - self.assigned_sum[u])
        return max(0, REQUIRED_SUM.get(label, 0) - self.assigned_sum[u])

    def lower_bound(self) -> int:
        """Residual demands summed over a greedy family with disjoint unassigned neighbourhoods."""
        demands = []
        for u in self.g.vertices():
            r = self.residual_demand(u)
            if r > 0:
                demands.append((r, u))
        demands.sort(key=lambda item: (-item[0], item[1]))
        used: set[int] = set()
        bound = 0
        for r, u in demands:
            free = {w for w in self.g.closed_neighborhood(u) if self.labels[w] < 0}
            if free & used:
                continue
            used |= free
            bound += r
        return bound


def brute_force(g: Graph, limit: int = BRUTE_FORCE_LIMIT) -> Solution:
    """
    Exact gamma_R3 by enumeration of labelings in breadth-first vertex order.

    A vertex is checked as soon as its closed neighbourhood is fully labelled,
    and partial labelings that can no longer beat the incumbent are dropped.
    """
    if g.n > limit:
        raise InstanceTooLargeError(g.n, limit, "branch_and_bound")
    if g.n == 0:
        return Solution(0, Labeling(()))

    order = search_order(g)
    state = _PartialLabeling(g)
    incumbent = _initial_incumbent(g)
    best_weight, best_labels = incumbent.weight, list(incumbent.labels)

    def extend(pos: int) -> None:
        nonlocal best_weight, best_labels
        if pos == len(order):
            if state.weight < best_weight:
                best_weight, best_labels = state.weight, list(state.labels)
            return
        v = order[pos]
        for label in (0, 1, 2, 3):
            if state.weight + label >= best_weight:
                break
            state.assign(v, label)
            if state.feasible_around(v):
                extend(pos + 1)
            state.unassign(v)

    extend(0)
    return Solution(best_weight, Labeling(tuple(best_labels)))


def branch_and_bound(
    g: Graph,
    budget: Optional[SearchBudget] = None,
    warm_start: Optional[Labeling] = None,
) -> SearchResult:
    """
    Depth-first branch-and-bound over vertex labels in non-increasing degree order.

    The outcome is EXACT only when the whole search tree was explored; when the
    budget runs out the best labeling found so far is returned and flagged.
    """
    budget = budget or SearchBudget()
    if g.n == 0:
        return SearchResult(0, Labeling(()), Outcome.EXACT)

    incumbent = _initial_incumbent(g)
    if warm_start is not None:
        if len(warm_start) == g.n and verify_labeling(g, warm_start).valid:
            if warm_start.weight < incumbent.weight:
                incumbent = warm_start
        else:
            logger.warning("warm start is not a valid labeling of this graph, ignoring it")
    best_weight, best_labels = incumbent.weight, list(incumbent.labels)

    order = sorted(g.vertices(), key=lambda v: (-g.degree(v), v))
    n = len(order)
    state = _PartialLabeling(g)
    next_choice = [0] * n
    deadline = None
    if budget.time_limit_ms is not None:
        deadline = time.perf_counter() + budget.time_limit_ms / 1000.0
    nodes = 0
    exhausted = False

    pos = 0
    while pos >= 0:
        if pos == n:
            if state.weight < best_weight:
                best_weight, best_labels = state.weight, list(state.labels)
                logger.debug(f"branch_and_bound incumbent improved to {best_weight} after {nodes} nodes")
            pos -= 1
            state.unassign(order[pos])
            continue
        v = order[pos]
        choice = next_choice[pos]
        if choice == len(BRANCH_LABELS):
            next_choice[pos] = 0
            pos -= 1
            if pos >= 0:
                state.unassign(order[pos])
            continue
        next_choice[pos] = choice + 1

        nodes += 1
        if budget.node_limit is not None and nodes > budget.node_limit:
            exhausted = True
            break
        if deadline is not None and nodes % 256 == 0 and time.perf_counter() > deadline:
            exhausted = True
            break

        state.assign(v, BRANCH_LABELS[choice])
        if not state.feasible_around(v) or state.weight + state.lower_bound() >= best_weight:
            state.unassign(v)
            continue
        pos += 1

    outcome = Outcome.BUDGET_EXHAUSTED if exhausted else Outcome.EXACT
    if exhausted:
        logger.warning(f"branch_and_bound budget exhausted after {nodes} nodes, best weight {best_weight}")
    return SearchResult(best_weight, Labeling(tuple(best_labels)), outcome, nodes)


def min_dominating_set(g: Graph, limit: int = DOMINATING_SET_LIMIT) -> frozenset[int]:
    """Minimum-cardinality dominating set by increasing subset size."""
    if g.n > limit:
        raise InstanceTooLargeError(g.n, limit)
    closed = [g.closed_neighborhood(v) for v in g.vertices()]
    everything = frozenset(g.vertices())
    for size in range(g.n + 1):
        for subset in combinations(g.vertices(), size):
            covered = frozenset().union(*(closed[v] for v in subset))
            if covered == everything:
                return frozenset(subset)
    return everything


def domination_number(g: Graph) -> int:
    return len(min_dominating_set(g))


def classify_state(label: int, sigma: int) -> int:
    """Rooted-graph state of a root with the given label and open neighbour sum."""
    if label == 0:
        return 0 if sigma >= 3 else {2: 4, 1: 5, 0: 6}[sigma]
    if label == 1:
        return 1 if sigma >= 2 else {1: 7, 0: 8}[sigma]
    return label


def brute_force_states(g: Graph, root: int, limit: int = STATE_LIMIT) -> tuple[ExtWeight, ...]:
    """
    Nine state minima of g rooted at root, straight from their definitions.

    Every vertex other than root must be satisfied inside g; root is classified
    by its label and its open neighbour sum.
    """
    if g.n > limit:
        raise InstanceTooLargeError(g.n, limit)
    order = [root] + [v for v in search_order(g) if v != root]
    state = _PartialLabeling(g)
    best: list[ExtWeight] = [INFEASIBLE] * 9

    def satisfied(u: int) -> bool:
        return u == root or state.can_satisfy(u)

    def extend(pos: int) -> None:
        if pos == len(order):
            s = classify_state(state.labels[root], state.assigned_sum[root])
            if best[s] is INFEASIBLE or state.weight < best[s]:
                best[s] = state.weight
            return
        v = order[pos]
        for label in (0, 1, 2, 3):
            state.assign(v, label)
            if satisfied(v) and all(satisfied(u) for u in g.adjacency[v]):
                extend(pos + 1)
            state.unassign(v)

    extend(0)
    return tuple(best)

