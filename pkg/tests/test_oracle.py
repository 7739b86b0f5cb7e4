import pytest

from roman3.errors import InstanceTooLargeError
from roman3.generators import gen_block_graph
from roman3.graph import Labeling, build_graph, verify_labeling
from roman3.oracle import (
    Outcome,
    SearchBudget,
    branch_and_bound,
    brute_force,
    domination_number,
    greedy_dominating_set,
    min_dominating_set,
)
from roman3.reductions.x3c import extract_cover_from_labeling, x3c_to_split, x3c_witness_to_labeling
from tests.conftest import SAMPLE_COVER, KNOWN_VALUES, complete, cycle, path


@pytest.mark.parametrize("name, g, expected", KNOWN_VALUES, ids=[name for name, _, _ in KNOWN_VALUES])
def test_brute_force_known_values(name, g, expected):
    weight, witness = brute_force(g)
    assert weight == expected
    assert verify_labeling(g, witness).valid
    assert witness.weight == expected


def test_brute_force_k3_witness_shape():
    _, witness = brute_force(complete(3))
    assert sorted(witness.labels) in ([0, 1, 2], [0, 0, 3])


def test_brute_force_sample_graph(sample_graph):
    assert brute_force(sample_graph).weight == 5


def test_brute_force_refuses_large_graphs():
    with pytest.raises(InstanceTooLargeError, match="branch_and_bound"):
        brute_force(path(15))


def test_brute_force_empty_graph():
    assert brute_force(build_graph(0, [])).weight == 0


@pytest.mark.parametrize("seed", range(20))
def test_branch_and_bound_matches_brute_force(seed):
    g = gen_block_graph(seed, 11, 4)
    result = branch_and_bound(g)
    assert result.outcome is Outcome.EXACT
    assert result.weight == brute_force(g).weight
    assert verify_labeling(g, result.witness).valid


@pytest.mark.parametrize("name, g, expected", KNOWN_VALUES, ids=[name for name, _, _ in KNOWN_VALUES])
def test_branch_and_bound_known_values(name, g, expected):
    assert branch_and_bound(g).weight == expected


def test_branch_and_bound_sample_graph(sample_graph):
    result = branch_and_bound(sample_graph)
    assert (result.weight, result.outcome) == (5, Outcome.EXACT)


def test_branch_and_bound_budget_is_flagged():
    g = cycle(14)
    result = branch_and_bound(g, SearchBudget(node_limit=5))
    assert result.outcome is Outcome.BUDGET_EXHAUSTED
    assert not result.exact
    assert verify_labeling(g, result.witness).valid


def test_branch_and_bound_warm_start_on_reduced_instance(sample_x3c):
    red = x3c_to_split(sample_x3c)
    warm = x3c_witness_to_labeling(red, SAMPLE_COVER)
    result = branch_and_bound(red.graph, SearchBudget(node_limit=200_000), warm_start=warm)
    assert (result.weight, result.outcome) == (14, Outcome.EXACT)
    assert verify_labeling(red.graph, result.witness).valid
    assert extract_cover_from_labeling(red, result.witness) == SAMPLE_COVER


def test_branch_and_bound_ignores_invalid_warm_start():
    result = branch_and_bound(path(3), warm_start=Labeling.zeros(3))
    assert result.weight == 3


@pytest.mark.parametrize("g, size", [(complete(3), 1), (path(4), 2), (cycle(6), 2)])
def test_min_dominating_set(g, size):
    s = min_dominating_set(g)
    assert len(s) == size
    assert domination_number(g) == size


def test_min_dominating_set_refuses_large_graphs():
    with pytest.raises(InstanceTooLargeError):
        min_dominating_set(path(21))


def test_greedy_dominating_set_dominates(sample_graph):
    s = greedy_dominating_set(sample_graph)
    assert all(v in s or sample_graph.neighbor_set(v) & s for v in sample_graph.vertices())
