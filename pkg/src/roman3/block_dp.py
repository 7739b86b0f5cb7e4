"""
Nine-state dynamic programming for Roman {3}-domination on block graphs.

A rooted graph H (root u) is summarized by a StateVector s[0..8]. Every vertex
other than u must already satisfy its constraint inside H, counting u's label,
because its neighbourhood lies entirely in H. The root is classified by its
label f(u) and its open neighbour sum sigma inside H:

    state 0..3   f(u) = 0..3 and u is satisfied
    state 4      f(u) = 0, sigma = 2   (one neighbour labelled 2, or two labelled 1)
    state 5      f(u) = 0, sigma = 1
    state 6      f(u) = 0, sigma = 0
    state 7      f(u) = 1, sigma = 1
    state 8      f(u) = 1, sigma = 0

Blocks are consumed in end-block order; each block {v1, ..., vk} with anchor v1
composes the vector stored at v1 (H1) with the vectors stored at v2..vk (the
children H2..Hk) by the case functions below.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, NamedTuple, Optional, Sequence
import heapq
import logging
import math

from roman3.blocks import (
    build_cut_tree,
    decompose,
    end_block_order,
    non_clique_blocks,
)
from roman3.errors import DPConsistencyError, NotBlockGraphError
from roman3.graph import Graph, Labeling
from roman3.weights import INFEASIBLE, ExtWeight, ext_sum

logger = logging.getLogger(__name__)

STATE_COUNT = 9
STATE_LABEL = (0, 1, 2, 3, 0, 0, 0, 1, 1)
FINAL_STATES = (0, 1, 2, 3)

StateVector = tuple[ExtWeight, ...]

# State sets used by the recurrences.
ZERO = (0,)
ZERO_FOUR = (0, 4)
ZERO_FOUR_FIVE = (0, 4, 5)
LABEL_ZERO = (0, 4, 5, 6)
ONE = (1,)
ONE_SEVEN = (1, 7)
LABEL_ONE = (1, 7, 8)
TWO = (2,)
THREE = (3,)
TWO_THREE = (2, 3)
UNLABELLED_TWO_THREE = (0, 1, 4, 5, 6, 7, 8)
B_REST = (0, 1, 4, 5, 7, 8)
ALL = tuple(range(STATE_COUNT))

TRIPLE_STRATEGIES = ("enumerate", "smallest")


def leaf_state(v: int = 0) -> StateVector:
    """State vector of the single-vertex graph rooted at v."""
    return (INFEASIBLE, INFEASIBLE, 2, 3, INFEASIBLE, INFEASIBLE, 0, INFEASIBLE, 1)


def best_state(vector: StateVector, states: Sequence[int]) -> tuple[ExtWeight, Optional[int]]:
    """Minimum of vector over states and the first state attaining it."""
    best: ExtWeight = INFEASIBLE
    arg = None
    for s in states:
        w = vector[s]
        if w is not INFEASIBLE and (best is INFEASIBLE or w < best):
            best, arg = w, s
    return best, arg


@dataclass(frozen=True)
class Pick:
    """
    A child-selection pattern: the listed children take the listed states and
    every other child takes its cheapest state from rest.
    """

    value: ExtWeight
    picks: tuple[tuple[int, int], ...] = ()
    rest: tuple[int, ...] = ()

    def child_states(self, children: Sequence[StateVector]) -> tuple[int, ...]:
        chosen = dict(self.picks)
        states = []
        for r, vector in enumerate(children):
            if r in chosen:
                states.append(chosen[r])
            else:
                states.append(best_state(vector, self.rest)[1])
        return tuple(states)


NO_PICK = Pick(INFEASIBLE)


def _cheaper(pick: Pick, other: Pick) -> Pick:
    if other.value is INFEASIBLE:
        return pick
    if pick.value is INFEASIBLE or other.value < pick.value:
        return other
    return pick


def cheapest(*picks: Pick) -> Pick:
    best = NO_PICK
    for pick in picks:
        best = _cheaper(best, pick)
    return best


class _ChildTable:
    """Per-child minima over state sets, computed once per composition."""

    def __init__(self, children: Sequence[StateVector]):
        self.children = list(children)
        self._best: dict[tuple[int, ...], list[tuple[ExtWeight, Optional[int]]]] = {}
        self._rest: dict[tuple[int, ...], tuple[list[int], list[int], int]] = {}

    def __len__(self) -> int:
        return len(self.children)

    def best(self, states: tuple[int, ...]) -> list[tuple[ExtWeight, Optional[int]]]:
        if states not in self._best:
            self._best[states] = [best_state(vector, states) for vector in self.children]
        return self._best[states]

    def rest_profile(self, states: tuple[int, ...]) -> tuple[list[int], list[int], int]:
        """(finite minima with 0 for infeasible children, infeasible children, finite total)."""
        if states not in self._rest:
            finite, blocked = [], []
            for r, (w, _) in enumerate(self.best(states)):
                if w is INFEASIBLE:
                    blocked.append(r)
                    finite.append(0)
                else:
                    finite.append(w)
            self._rest[states] = (finite, blocked, sum(finite))
        return self._rest[states]


def pick_none(table: _ChildTable, rest: tuple[int, ...]) -> Pick:
    """Every child takes its cheapest state from rest."""
    return Pick(ext_sum(w for w, _ in table.best(rest)), (), rest)


def pick_one(table: _ChildTable, pick: tuple[int, ...], rest: tuple[int, ...]) -> Pick:
    finite, blocked, total = table.rest_profile(rest)
    if len(blocked) > 1:
        return NO_PICK
    options = table.best(pick)
    best_value, best_pick = None, None
    for a in blocked or range(len(table)):
        w, s = options[a]
        if w is INFEASIBLE:
            continue
        value = w + total - finite[a]
        if best_value is None or value < best_value:
            best_value, best_pick = value, ((a, s),)
    if best_pick is None:
        return NO_PICK
    return Pick(best_value, best_pick, rest)


def pick_pair(
    table: _ChildTable, first: tuple[int, ...], second: tuple[int, ...], rest: tuple[int, ...]
) -> Pick:
    """Two distinct children take states from first and second; unordered when the sets agree."""
    finite, blocked, total = table.rest_profile(rest)
    if len(blocked) > 2:
        return NO_PICK
    required = set(blocked)
    symmetric = first == second
    firsts, seconds = table.best(first), table.best(second)
    k = len(table)
    best_value, best_pick = None, None
    for a in range(k):
        wa, sa = firsts[a]
        if wa is INFEASIBLE:
            continue
        base = wa + total - finite[a]
        for b in range(a + 1 if symmetric else 0, k):
            if b == a:
                continue
            wb, sb = seconds[b]
            if wb is INFEASIBLE:
                continue
            if required and not required <= {a, b}:
                continue
            value = base + wb - finite[b]
            if best_value is None or value < best_value:
                best_value, best_pick = value, ((a, sa), (b, sb))
    if best_pick is None:
        return NO_PICK
    return Pick(best_value, best_pick, rest)


def pick_triple(
    table: _ChildTable, pick: tuple[int, ...], rest: tuple[int, ...], strategy: str = "enumerate"
) -> Pick:
    """Three distinct children take states from pick."""
    finite, blocked, total = table.rest_profile(rest)
    if len(blocked) > 3:
        return NO_PICK
    options = table.best(pick)
    candidates = [r for r in range(len(table)) if options[r][0] is not INFEASIBLE]
    if not set(blocked) <= set(candidates) or len(candidates) < 3:
        return NO_PICK
    delta = [options[r][0] - finite[r] for r in candidates]
    required = {candidates.index(r) for r in blocked}
    if strategy == "smallest":
        chosen = _smallest_triple(delta, required)
    else:
        chosen = _enumerate_triples(delta, required)
    if chosen is None:
        return NO_PICK
    value = total + sum(delta[i] for i in chosen)
    return Pick(value, tuple((candidates[i], options[candidates[i]][1]) for i in chosen), rest)


def _enumerate_triples(delta: list[int], required: set[int]) -> Optional[tuple[int, int, int]]:
    m = len(delta)
    best, arg = math.inf, None
    if required:
        for triple in combinations(range(m), 3):
            if required <= set(triple):
                s = delta[triple[0]] + delta[triple[1]] + delta[triple[2]]
                if s < best:
                    best, arg = s, triple
        return arg
    for i in range(m):
        di = delta[i]
        for j in range(i + 1, m):
            dij = di + delta[j]
            for l in range(j + 1, m):
                s = dij + delta[l]
                if s < best:
                    best, arg = s, (i, j, l)
    return arg


def _smallest_triple(delta: list[int], required: set[int]) -> Optional[tuple[int, int, int]]:
    free = [i for i in range(len(delta)) if i not in required]
    fill = heapq.nsmallest(3 - len(required), free, key=lambda i: (delta[i], i))
    chosen = tuple(sorted(required | set(fill)))
    return chosen if len(chosen) == 3 else None


@dataclass(frozen=True)
class Aggregates:
    """
    Child-selection minima over v2..vk.

    a1..c3 are the printed aggregates. The remaining fields complete them for
    the state semantics above: a4 (two children labelled 2, rest free), b5 (one
    child labelled 2 or 3, rest free), and the exact variants b1_exact,
    b2_exact, c2_exact whose unpicked children are all labelled 0.
    """

    a1: Pick = NO_PICK
    a2: Pick = NO_PICK
    a3: Pick = NO_PICK
    a4: Pick = NO_PICK
    b1: Pick = NO_PICK
    b2: Pick = NO_PICK
    b3: Pick = NO_PICK
    b4: Pick = NO_PICK
    b5: Pick = NO_PICK
    c1: Pick = NO_PICK
    c2: Pick = NO_PICK
    c3: Pick = NO_PICK
    b1_exact: Pick = NO_PICK
    b2_exact: Pick = NO_PICK
    c2_exact: Pick = NO_PICK


def _aggregates(table: _ChildTable, triple_search: str) -> Aggregates:
    if not len(table):
        return Aggregates()
    return Aggregates(
        a1=pick_one(table, THREE, ALL),
        a2=pick_pair(table, TWO, LABEL_ONE, ALL),
        a3=pick_triple(table, LABEL_ONE, ALL, triple_search),
        a4=pick_pair(table, TWO, TWO, ALL),
        b1=pick_one(table, TWO, B_REST),
        b2=pick_pair(table, ONE_SEVEN, ONE_SEVEN, B_REST),
        b3=pick_one(table, TWO, UNLABELLED_TWO_THREE),
        b4=pick_pair(table, LABEL_ONE, LABEL_ONE, UNLABELLED_TWO_THREE),
        b5=pick_one(table, TWO_THREE, ALL),
        c1=pick_one(table, ONE, ZERO_FOUR),
        c2=pick_one(table, ONE_SEVEN, B_REST),
        c3=pick_one(table, LABEL_ONE, ALL),
        b1_exact=pick_one(table, TWO, ZERO_FOUR_FIVE),
        b2_exact=pick_pair(table, ONE_SEVEN, ONE_SEVEN, ZERO_FOUR_FIVE),
        c2_exact=pick_one(table, ONE_SEVEN, ZERO_FOUR_FIVE),
    )


def compute_aggregates(
    child_states: Sequence[StateVector], triple_search: str = "enumerate"
) -> Aggregates:
    return _aggregates(_ChildTable(child_states), triple_search)


@dataclass(frozen=True)
class ChoiceRecord:
    """The branch that produced a stored weight: root's previous state plus the child pattern."""

    case: str
    root_state: int
    pick: Pick


Candidate = tuple[ExtWeight, Optional[ChoiceRecord]]
INFEASIBLE_CANDIDATE: Candidate = (INFEASIBLE, None)


def _branch(case: str, root: StateVector, root_states: tuple[int, ...], pick: Pick) -> Candidate:
    w, s = best_state(root, root_states)
    if w is INFEASIBLE or pick.value is INFEASIBLE:
        return INFEASIBLE_CANDIDATE
    return w + pick.value, ChoiceRecord(case, s, pick)


# (a) root labelled 0 and satisfied.

def gamma0_case1(root: StateVector, table: _ChildTable, agg: Aggregates) -> Candidate:
    """Every v2..vk labelled 0."""
    return _branch("a.1", root, ZERO, pick_none(table, ZERO))


def gamma0_case2(root: StateVector, table: _ChildTable, agg: Aggregates) -> Candidate:
    """Exactly one of v2..vk labelled 1."""
    return _branch("a.2", root, ZERO_FOUR, agg.c1)


def gamma0_case3(root: StateVector, table: _ChildTable, agg: Aggregates) -> Candidate:
    """The children contribute exactly 2."""
    return _branch("a.3", root, ZERO_FOUR_FIVE, cheapest(agg.b1, agg.b2))


def gamma0_case4(root: StateVector, table: _ChildTable, agg: Aggregates) -> Candidate:
    """The children contribute at least 3."""
    return _branch("a.4", root, LABEL_ZERO, cheapest(agg.a1, agg.a2, agg.a3, agg.a4))


# (b) root labelled 1 and satisfied.

def gamma1_case1(root: StateVector, table: _ChildTable, agg: Aggregates) -> Candidate:
    return _branch("b.1", root, ONE, pick_none(table, ZERO_FOUR))


def gamma1_case2(root: StateVector, table: _ChildTable, agg: Aggregates) -> Candidate:
    return _branch("b.2", root, ONE_SEVEN, agg.c2)


def gamma1_case3(root: StateVector, table: _ChildTable, agg: Aggregates) -> Candidate:
    return _branch("b.3", root, LABEL_ONE, cheapest(agg.b3, agg.b4, agg.b5))


# (c) root labelled 2.

def gamma2_case1(root: StateVector, table: _ChildTable, agg: Aggregates) -> Candidate:
    return _branch("c.1", root, TWO, pick_none(table, ZERO_FOUR_FIVE))


def gamma2_case2(root: StateVector, table: _ChildTable, agg: Aggregates) -> Candidate:
    return _branch("c.2", root, TWO, cheapest(agg.c3, agg.b5))


# (d) root labelled 3.

def gamma3(root: StateVector, table: _ChildTable, agg: Aggregates) -> Candidate:
    return _branch("d", root, THREE, pick_none(table, ALL))


# (e) root labelled 0 with neighbour sum exactly 2.

def gamma4_case1(root: StateVector, table: _ChildTable, agg: Aggregates) -> Candidate:
    return _branch("e.1", root, (4,), pick_none(table, ZERO))


def gamma4_case2(root: StateVector, table: _ChildTable, agg: Aggregates) -> Candidate:
    return _branch("e.2", root, (5,), agg.c1)


def gamma4_case3(root: StateVector, table: _ChildTable, agg: Aggregates) -> Candidate:
    return _branch("e.3", root, (6,), cheapest(agg.b1_exact, agg.b2_exact))


# (f) root labelled 0 with neighbour sum exactly 1.

def gamma5_case1(root: StateVector, table: _ChildTable, agg: Aggregates) -> Candidate:
    return _branch("f.1", root, (5,), pick_none(table, ZERO))


def gamma5_case2(root: StateVector, table: _ChildTable, agg: Aggregates) -> Candidate:
    return _branch("f.2", root, (6,), agg.c1)


# (g) root and its whole neighbourhood labelled 0.

def gamma6(root: StateVector, table: _ChildTable, agg: Aggregates) -> Candidate:
    return _branch("g", root, (6,), pick_none(table, ZERO))


# (h) root labelled 1 with neighbour sum exactly 1.

def gamma7_case1(root: StateVector, table: _ChildTable, agg: Aggregates) -> Candidate:
    return _branch("h.1", root, (7,), pick_none(table, ZERO_FOUR))


def gamma7_case2(root: StateVector, table: _ChildTable, agg: Aggregates) -> Candidate:
    return _branch("h.2", root, (8,), agg.c2_exact)


# (i) root labelled 1 with every neighbour labelled 0.

def gamma8(root: StateVector, table: _ChildTable, agg: Aggregates) -> Candidate:
    return _branch("i", root, (8,), pick_none(table, ZERO_FOUR))


Recurrence = Callable[[StateVector, _ChildTable, Aggregates], Candidate]

RECURRENCES: tuple[tuple[Recurrence, ...], ...] = (
    (gamma0_case1, gamma0_case2, gamma0_case3, gamma0_case4),
    (gamma1_case1, gamma1_case2, gamma1_case3),
    (gamma2_case1, gamma2_case2),
    (gamma3,),
    (gamma4_case1, gamma4_case2, gamma4_case3),
    (gamma5_case1, gamma5_case2),
    (gamma6,),
    (gamma7_case1, gamma7_case2),
    (gamma8,),
)


def compose_block_traced(
    root_state: StateVector,
    child_states: Sequence[StateVector],
    triple_search: str = "enumerate",
) -> tuple[StateVector, tuple[Optional[ChoiceRecord], ...]]:
    """Compose H1 (root_state) with the children and record the winning branch per state."""
    if not child_states:
        return tuple(root_state), (None,) * STATE_COUNT
    table = _ChildTable(child_states)
    agg = _aggregates(table, triple_search)
    states: list[ExtWeight] = []
    choices: list[Optional[ChoiceRecord]] = []
    for cases in RECURRENCES:
        best: Candidate = INFEASIBLE_CANDIDATE
        for case in cases:
            candidate = case(root_state, table, agg)
            if candidate[0] is not INFEASIBLE and (best[0] is INFEASIBLE or candidate[0] < best[0]):
                best = candidate
        states.append(best[0])
        choices.append(best[1])
    return tuple(states), tuple(choices)


def compose_block(
    root_state: StateVector,
    child_states: Sequence[StateVector],
    triple_search: str = "enumerate",
) -> StateVector:
    return compose_block_traced(root_state, child_states, triple_search)[0]


def standalone_weight(vector: StateVector) -> ExtWeight:
    """Optimum of the rooted graph taken as a whole graph."""
    return best_state(vector, FINAL_STATES)[0]


@dataclass(frozen=True, eq=False)
class StateNode:
    """A rooted partial graph: its vertex set, its vector and how it was composed."""

    vertex: int
    states: StateVector
    vertices: frozenset[int]
    base: Optional["StateNode"] = None
    children: tuple["StateNode", ...] = ()
    choices: tuple[Optional[ChoiceRecord], ...] = field(default=(None,) * STATE_COUNT)

    @property
    def is_leaf(self) -> bool:
        return self.base is None

    @classmethod
    def leaf(cls, v: int) -> "StateNode":
        return cls(v, leaf_state(v), frozenset((v,)))


def choice_weight(node: StateNode, state: int) -> ExtWeight:
    """Replay the recorded choice of node for state."""
    record = node.choices[state]
    if node.is_leaf or record is None:
        return node.states[state]
    child_states = record.pick.child_states([child.states for child in node.children])
    return ext_sum(
        [node.base.states[record.root_state]]
        + [child.states[s] for child, s in zip(node.children, child_states)]
    )


@dataclass(frozen=True)
class DPRun:
    graph: Graph
    roots: tuple[StateNode, ...]
    nodes: tuple[StateNode, ...]

    @property
    def weight(self) -> int:
        return sum(standalone_weight(root.states) for root in self.roots)


def run_block_dp(
    g: Graph,
    order: Optional[Sequence[tuple[int, Optional[int]]]] = None,
    triple_search: str = "enumerate",
) -> DPRun:
    """Run the DP over every component; order defaults to end_block_order."""
    if triple_search not in TRIPLE_STRATEGIES:
        raise ValueError(f"unknown triple search '{triple_search}', expected one of {TRIPLE_STRATEGIES}")
    dec = decompose(g)
    bad = non_clique_blocks(g, dec)
    if bad:
        raise NotBlockGraphError(bad[0])
    if order is None:
        order = end_block_order(build_cut_tree(dec))

    current = [StateNode.leaf(v) for v in g.vertices()]
    roots: list[StateNode] = []
    composed: list[StateNode] = []
    for block_id, anchor in order:
        block = dec.blocks[block_id]
        root = anchor if anchor is not None else min(block)
        others = sorted(block - {root})
        if others:
            base = current[root]
            children = tuple(current[v] for v in others)
            states, choices = compose_block_traced(
                base.states, [child.states for child in children], triple_search
            )
            node = StateNode(
                root,
                states,
                base.vertices.union(*(child.vertices for child in children)),
                base,
                children,
                choices,
            )
            current[root] = node
            composed.append(node)
        if anchor is None:
            roots.append(current[root])
    logger.debug(f"block DP composed {len(composed)} blocks into {len(roots)} components")
    return DPRun(g, tuple(roots), tuple(composed))


LEAF_LABEL = {2: 2, 3: 3, 6: 0, 8: 1}


def reconstruct_labeling(run: DPRun) -> Labeling:
    """Walk the recorded choices from each component root down to the single vertices."""
    labels: list[Optional[int]] = [None] * run.graph.n
    stack: list[tuple[StateNode, int]] = []
    for root in run.roots:
        _, state = best_state(root.states, FINAL_STATES)
        if state is None:
            raise DPConsistencyError(f"component rooted at {root.vertex} has no feasible final state")
        stack.append((root, state))
    while stack:
        node, state = stack.pop()
        if node.states[state] is INFEASIBLE:
            raise DPConsistencyError(f"state {state} at vertex {node.vertex} is infeasible")
        if node.is_leaf:
            labels[node.vertex] = LEAF_LABEL[state]
            continue
        record = node.choices[state]
        if record is None:
            raise DPConsistencyError(f"no choice recorded for state {state} at vertex {node.vertex}")
        if STATE_LABEL[record.root_state] != STATE_LABEL[state]:
            raise DPConsistencyError(f"case {record.case} changes the label of vertex {node.vertex}")
        if choice_weight(node, state) != node.states[state]:
            raise DPConsistencyError(f"case {record.case} at vertex {node.vertex} does not replay")
        child_states = record.pick.child_states([child.states for child in node.children])
        stack.append((node.base, record.root_state))
        stack.extend(zip(node.children, child_states))
    if any(label is None for label in labels):
        raise DPConsistencyError("some vertex was never reached by the reconstruction")
    return Labeling(tuple(labels))


class BlockDPSolution(NamedTuple):
    weight: int
    witness: Labeling


def solve_block_graph(g: Graph, triple_search: str = "enumerate") -> BlockDPSolution:
    """gamma_R3(g) and an optimal labeling; components are solved separately and summed."""
    if g.n == 0:
        return BlockDPSolution(0, Labeling(()))
    run = run_block_dp(g, triple_search=triple_search)
    return BlockDPSolution(run.weight, reconstruct_labeling(run))
