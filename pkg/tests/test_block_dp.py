import random

import pytest

from roman3.block_dp import (
    LEAF_LABEL,
    STATE_LABEL,
    _ChildTable,
    choice_weight,
    compose_block,
    compute_aggregates,
    gamma4_case2,
    leaf_state,
    reconstruct_labeling,
    run_block_dp,
    solve_block_graph,
    standalone_weight,
)
from roman3.blocks import build_cut_tree, decompose, end_block_order
from roman3.errors import NotBlockGraphError
from roman3.generators import gen_block_graph
from roman3.graph import Labeling, build_graph, verify_labeling
from roman3.oracle import brute_force
from roman3.weights import INFEASIBLE
from tests.conftest import KNOWN_VALUES, cycle, path, spider, star

I = INFEASIBLE


def test_leaf_state():
    assert leaf_state(7) == (I, I, 2, 3, I, I, 0, I, 1)
    assert standalone_weight(leaf_state(0)) == 2


def test_leaf_labels_follow_state_labels():
    for state, label in LEAF_LABEL.items():
        assert STATE_LABEL[state] == label


def test_aggregates_one_leaf_child():
    agg = compute_aggregates([leaf_state(1)])
    assert agg.c1.value is I
    assert agg.b1.value == 2
    assert agg.a1.value == 3
    assert agg.c3.value == 1
    for pick in (agg.a2, agg.a3, agg.b2, agg.b4):
        assert pick.value is I


def test_aggregates_no_children():
    agg = compute_aggregates([])
    assert all(getattr(agg, name).value is I for name in agg.__dataclass_fields__)


def test_aggregates_three_leaf_children():
    agg = compute_aggregates([leaf_state(v) for v in (1, 2, 3)])
    assert agg.a3.value == 3
    assert len(agg.a3.picks) == 3


def test_compose_k2():
    assert compose_block(leaf_state(0), [leaf_state(1)]) == (3, 3, 3, 3, 2, I, I, I, I)


@pytest.mark.parametrize("k, expected", [(2, 3), (4, 3)])
def test_compose_clique(k, expected):
    s = compose_block(leaf_state(0), [leaf_state(v) for v in range(1, k + 1)])
    assert standalone_weight(s) == expected


def test_pending_root_with_one_child_labelled_one():
    # Root labelled 0 with one 1-neighbour outside the block, plus a child labelled 1: pending sum 2.
    root = (I, I, I, I, I, 4, I, I, I)
    child = (I, 2, I, I, I, I, I, I, I)
    agg = compute_aggregates([child])
    value, record = gamma4_case2(root, _ChildTable([child]), agg)
    assert value == 6
    assert record.root_state == 5


@pytest.mark.parametrize("name, g, expected", KNOWN_VALUES, ids=[name for name, _, _ in KNOWN_VALUES])
def test_known_values(name, g, expected):
    if name == "C4":
        pytest.skip("C4 is not a block graph")
    weight, witness = solve_block_graph(g)
    assert weight == expected
    assert verify_labeling(g, witness).valid
    assert witness.weight == weight


def test_sample_graph_weight_and_witness(sample_graph):
    weight, witness = solve_block_graph(sample_graph)
    assert weight == 5
    assert verify_labeling(sample_graph, witness).valid
    assert witness.weight == 5


def test_spider_matches_oracle():
    g = spider(3, 2)
    assert solve_block_graph(g).weight == brute_force(g).weight


def test_k1_witness():
    assert solve_block_graph(build_graph(1, [])).witness == Labeling.of([2])


def test_k2_witness_is_optimal():
    weight, witness = solve_block_graph(path(2))
    assert weight == 3
    assert witness.labels in {(0, 3), (3, 0), (2, 1), (1, 2)}


def test_empty_graph():
    weight, witness = solve_block_graph(build_graph(0, []))
    assert weight == 0
    assert len(witness) == 0


def test_isolated_vertices_add_two_each():
    g = build_graph(4, [(0, 1)])
    assert solve_block_graph(g).weight == 3 + 2 + 2


def test_non_block_graph_is_rejected():
    with pytest.raises(NotBlockGraphError) as error:
        solve_block_graph(cycle(4))
    assert error.value.block == frozenset(range(4))


def test_choices_replay_every_state(sample_graph):
    run = run_block_dp(sample_graph)
    for node in run.nodes:
        for state, value in enumerate(node.states):
            if value is not I:
                assert choice_weight(node, state) == value


def test_reconstruction_of_run(sample_graph):
    run = run_block_dp(sample_graph)
    f = reconstruct_labeling(run)
    assert f.weight == run.weight == 5


@pytest.mark.parametrize("seed", range(5))
def test_shuffled_orders_agree(seed):
    g = gen_block_graph(seed, 12, 4)
    dec = decompose(g)
    tree = build_cut_tree(dec)
    expected = run_block_dp(g).weight
    for draw in range(5):
        order = end_block_order(tree, random.Random(seed * 100 + draw))
        run = run_block_dp(g, order)
        assert run.weight == expected
        assert verify_labeling(g, reconstruct_labeling(run)).valid


@pytest.mark.parametrize("seed", range(30))
def test_smallest_triple_search_matches_enumeration(seed):
    g = gen_block_graph(seed, 14, 6)
    assert (
        solve_block_graph(g, triple_search="smallest").weight
        == solve_block_graph(g, triple_search="enumerate").weight
    )


def test_smallest_triple_search_on_star():
    g = star(6)
    assert solve_block_graph(g, triple_search="smallest").weight == 3


def test_unknown_triple_search():
    with pytest.raises(ValueError):
        run_block_dp(path(3), triple_search="fastest")
