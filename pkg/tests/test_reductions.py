import logging

import pytest

from roman3.errors import (
    GraphError,
    InstanceError,
    NotDominatingError,
    NotExactCoverError,
    ReductionError,
)
from roman3.graph import build_graph, is_split_partition, verify_labeling
from roman3.reductions.ds import (
    check_ds_structure,
    ds_to_r3d,
    ds_witness_conditions,
    ds_witness_to_labeling,
    extract_ds_from_labeling,
)
from roman3.reductions.ds import strip_padding as strip_ds_padding
from roman3.reductions.roles import parse_tag, role_counts
from roman3.reductions.x3c import (
    X3CInstance,
    check_split_structure,
    cover_defects,
    extract_cover_from_labeling,
    pad_instance,
    strip_padding,
    x3c_to_split,
    x3c_witness_to_labeling,
)
from tests.conftest import SAMPLE_COVER, cycle, path, star


def test_split_reduction_layout(sample_x3c):
    red = x3c_to_split(sample_x3c)
    assert red.graph.n == 62
    assert red.counts == {"X": 6, "C": 4, "A": 6, "B": 6, "Y": 20, "Z": 20}
    assert red.target == 14
    assert not red.padded
    assert check_split_structure(red) == []


def test_split_reduction_is_split(sample_x3c):
    red = x3c_to_split(sample_x3c)
    clique = [*red.vertices("A"), *red.vertices("B"), *red.vertices("C")]
    independent = [*red.vertices("X"), *red.vertices("Y"), *red.vertices("Z")]
    assert is_split_partition(red.graph, clique, independent)


def test_split_reduction_degrees(sample_x3c):
    red = x3c_to_split(sample_x3c)
    g = red.graph
    for z in red.vertices("Z"):
        assert g.degree(z) == 3
        assert g.neighbor_set(z) <= set(red.vertices("A"))
    # element 0 lies in triples 0 and 1, element 2 only in triple 0
    assert g.degree(red.x_vertex(0)) == 4
    assert g.degree(red.x_vertex(2)) == 3


def test_split_witness_sample_x3c(sample_x3c):
    red = x3c_to_split(sample_x3c)
    f = x3c_witness_to_labeling(red, SAMPLE_COVER)
    assert f.weight == 14
    assert verify_labeling(red.graph, f).valid
    assert extract_cover_from_labeling(red, f) == SAMPLE_COVER


def test_split_witness_rejects_non_cover(sample_x3c):
    red = x3c_to_split(sample_x3c)
    with pytest.raises(NotExactCoverError) as error:
        x3c_witness_to_labeling(red, {0, 1})
    assert error.value.uncovered == [4, 5]
    assert error.value.doubly_covered == [0, 1]


def test_split_witness_rejects_missing_triple(sample_x3c):
    with pytest.raises(ReductionError):
        x3c_witness_to_labeling(x3c_to_split(sample_x3c), {0, 9})


def test_extract_rejects_overweight_labeling(sample_x3c):
    red = x3c_to_split(sample_x3c)
    f = x3c_witness_to_labeling(red, SAMPLE_COVER).with_label(red.c_vertex(1), 1)
    with pytest.raises(ReductionError, match="above the target"):
        extract_cover_from_labeling(red, f)


def test_extract_rejects_invalid_labeling(sample_x3c):
    red = x3c_to_split(sample_x3c)
    f = x3c_witness_to_labeling(red, SAMPLE_COVER).with_label(red.c_vertex(2), 0)
    with pytest.raises(ReductionError, match="not valid"):
        extract_cover_from_labeling(red, f)


def test_odd_q_is_padded():
    inst = X3CInstance.of(3, [(0, 1, 2)])
    padded, was_padded = pad_instance(inst)
    assert was_padded
    assert padded.universe_size == 6
    assert padded.triples[-1] == (3, 4, 5)

    red = x3c_to_split(inst)
    assert red.padded
    assert red.padding == {"elements": 3, "triples": 1}
    assert red.target == 14
    assert red.roles[red.c_vertex(1)].tag == "C.1.pad"
    f = x3c_witness_to_labeling(red, {0})
    assert verify_labeling(red.graph, f).valid
    cover = extract_cover_from_labeling(red, f)
    assert cover == {0, 1}
    assert strip_padding(red, cover) == {0}


def test_padding_is_logged_as_a_warning(caplog):
    with caplog.at_level(logging.WARNING, logger="roman3.reductions"):
        x3c_to_split(X3CInstance.of(3, [(0, 1, 2)]))
        ds_to_r3d(path(3), 2)
    messages = [record.getMessage() for record in caplog.records if record.levelno == logging.WARNING]
    assert any("q=1 is odd" in message for message in messages)
    assert any("k=2 is not a multiple of 3" in message for message in messages)


def test_even_q_is_not_padded(sample_x3c):
    assert pad_instance(sample_x3c) == (sample_x3c, False)


def test_cover_defects(sample_x3c):
    assert cover_defects(sample_x3c, SAMPLE_COVER) == ([], [])
    assert cover_defects(sample_x3c, [3]) == ([0, 2, 3], [])


@pytest.mark.parametrize(
    "size, triples",
    [(4, [(0, 1, 2)]), (6, [(0, 1, 1)]), (6, [(0, 1, 6)]), (0, [])],
)
def test_invalid_x3c_instances(size, triples):
    with pytest.raises(InstanceError):
        X3CInstance.of(size, triples)


def test_role_tags_round_trip(sample_x3c):
    red = x3c_to_split(sample_x3c)
    for role in red.roles:
        assert parse_tag(role.tag) == role
    assert role_counts(red.roles) == red.counts


def test_ds_reduction_layout():
    red = ds_to_r3d(cycle(4), 3)
    assert red.graph.n == 75
    assert red.target == 36
    assert red.counts == {"A": 12, "B": 36, "x": 9, "y": 9, "z": 9}
    assert red.padding == {"vertices": 0, "k": 0}
    assert check_ds_structure(red) == []


def test_ds_witness_c4():
    red = ds_to_r3d(cycle(4), 3)
    f = ds_witness_to_labeling(red, {0, 2})
    assert f.weight == 33
    assert verify_labeling(red.graph, f).valid
    assert ds_witness_conditions(red, f) == []
    assert extract_ds_from_labeling(red, f) == {0, 2}


def test_ds_witness_star():
    red = ds_to_r3d(star(5), 3)
    f = ds_witness_to_labeling(red, {0})
    assert f.weight == 30
    assert verify_labeling(red.graph, f).valid


def test_ds_witness_rejects_non_dominating_set():
    red = ds_to_r3d(path(3), 3)
    with pytest.raises(NotDominatingError) as error:
        ds_witness_to_labeling(red, set())
    assert error.value.vertex == 0


def test_ds_witness_rejects_oversized_set():
    red = ds_to_r3d(path(6), 3)
    with pytest.raises(ReductionError, match="more than k=3"):
        ds_witness_to_labeling(red, {0, 1, 2, 4})


def test_ds_k_is_padded():
    red = ds_to_r3d(path(3), 2)
    assert red.k_effective == 3
    assert red.n == 4
    assert red.padding == {"vertices": 1, "k": 1}
    assert red.roles[red.a_vertex(0, 3)].tag == "A.0.3.pad"
    f = ds_witness_to_labeling(red, {1})
    assert verify_labeling(red.graph, f).valid
    s = extract_ds_from_labeling(red, f)
    assert s == {1, 3}
    assert strip_ds_padding(red, s) == {1}


def test_ds_rejects_bad_k():
    with pytest.raises(GraphError):
        ds_to_r3d(path(3), 0)


def test_ds_broken_gadget_fails_extraction():
    red = ds_to_r3d(cycle(4), 3)
    f = ds_witness_to_labeling(red, {0, 2}).with_label(red.x_vertex(0, 0), 0)
    assert "x.0.0 labelled 0, expected 2" in ds_witness_conditions(red, f)
    with pytest.raises(ReductionError):
        extract_ds_from_labeling(red, f)


def test_ds_extraction_from_heavier_labeling():
    red = ds_to_r3d(cycle(4), 3)
    f = ds_witness_to_labeling(red, {0, 2}).with_label(red.a_vertex(0, 1), 1)
    assert f.weight == 34 <= red.target
    s = extract_ds_from_labeling(red, f)
    assert s == {0, 1, 2}
    assert len(s) <= red.k_effective


def test_ds_padding_is_idempotent():
    g = build_graph(3, [(0, 1)])
    first = ds_to_r3d(g, 3)
    assert first.padding == {"vertices": 0, "k": 0}
    again = ds_to_r3d(first.source, first.k_effective)
    assert again.graph == first.graph
