import json

import pytest
from typer.testing import CliRunner

from roman3.cli import app
from roman3.formats import parse_graph, parse_labeling, write_graph, write_labeling, write_x3c
from roman3.graph import Labeling, verify_labeling
from tests.conftest import KNOWN_VALUES, SAMPLE_TRIPLES, cycle, path

BLOCK_GRAPH_VALUES = [case for case in KNOWN_VALUES if case[0] != "C4"]

runner = CliRunner()


@pytest.fixture
def sample_file(sample_graph, tmp_path):
    target = tmp_path / "sample.txt"
    target.write_text(write_graph(sample_graph))
    return target


@pytest.fixture
def x3c_file(sample_x3c, tmp_path):
    target = tmp_path / "sample.x3c"
    target.write_text(write_x3c(sample_x3c))
    return target


def invoke(*args):
    return runner.invoke(app, [str(a) for a in args])


def test_solve_sample_graph(sample_file, tmp_path):
    labels = tmp_path / "labels.txt"
    result = invoke("solve", sample_file, "-o", labels)
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["weight"] == 5
    assert payload["exact"] is True
    assert payload["algo"] == "block-dp"
    assert parse_labeling(labels.read_text(), 8).weight == 5


@pytest.mark.parametrize("algo", ["brute", "bnb"])
def test_solve_with_oracles(sample_file, algo):
    result = invoke("solve", sample_file, "--algo", algo)
    assert result.exit_code == 0
    assert json.loads(result.stdout)["weight"] == 5


@pytest.mark.parametrize("name, g, expected", BLOCK_GRAPH_VALUES, ids=[name for name, _, _ in BLOCK_GRAPH_VALUES])
def test_solve_algorithms_agree_on_block_graphs(tmp_path, name, g, expected):
    target = tmp_path / "graph.txt"
    target.write_text(write_graph(g))
    weights = {}
    for algo in ("block-dp", "brute"):
        result = invoke("solve", target, "--algo", algo)
        assert result.exit_code == 0
        payload = json.loads(result.stdout)
        assert verify_labeling(g, Labeling.of(payload["labels"])).valid
        weights[algo] = payload["weight"]
    assert weights == {"block-dp": expected, "brute": expected}


def test_solve_pretty(sample_file):
    result = invoke("solve", sample_file, "--pretty")
    assert result.exit_code == 0
    assert "Weight" in result.stdout


def test_solve_rejects_non_block_graph(tmp_path):
    target = tmp_path / "c4.txt"
    target.write_text(write_graph(cycle(4)))
    result = invoke("solve", target)
    assert result.exit_code == 1
    payload = json.loads(result.stdout)
    assert payload["error"] == "not_block_graph"
    assert payload["block"] == [0, 1, 2, 3]


def test_solve_brute_force_refuses_large_graph(tmp_path):
    target = tmp_path / "p20.txt"
    target.write_text(write_graph(path(20)))
    result = invoke("solve", target, "--algo", "brute")
    assert result.exit_code == 1
    assert json.loads(result.stdout)["error"] == "instance_too_large"


def test_solve_budget_needs_bnb(sample_file):
    assert invoke("solve", sample_file, "--budget-ms", "10").exit_code == 2


def test_solve_bnb_with_node_limit(tmp_path):
    target = tmp_path / "c14.txt"
    target.write_text(write_graph(cycle(14)))
    result = invoke("solve", target, "--algo", "bnb", "--node-limit", "5")
    assert result.exit_code == 0
    assert json.loads(result.stdout)["exact"] is False


@pytest.mark.parametrize("args", [["--algo", "magic"], ["--triple-search", "fastest"]])
def test_solve_bad_choices(sample_file, args):
    assert invoke("solve", sample_file, *args).exit_code == 2


def test_solve_parse_error(tmp_path):
    target = tmp_path / "bad.txt"
    target.write_text("3 1\n0 7\n")
    assert invoke("solve", target).exit_code == 2


def test_solve_missing_file(tmp_path):
    assert invoke("solve", tmp_path / "missing.txt").exit_code == 2


def test_verify_valid_and_invalid(tmp_path):
    graph = tmp_path / "p2.txt"
    graph.write_text(write_graph(path(2)))
    good = tmp_path / "good.txt"
    good.write_text(write_labeling(Labeling.of([2, 1])))
    bad = tmp_path / "bad.txt"
    bad.write_text(write_labeling(Labeling.of([1, 1])))

    result = invoke("verify", graph, good)
    assert result.exit_code == 0
    assert json.loads(result.stdout) == {"weight": 3, "valid": True, "violations": []}

    result = invoke("verify", graph, bad)
    assert result.exit_code == 1
    payload = json.loads(result.stdout)
    assert payload["violations"][0] == {"vertex": 0, "required": 2, "actual": 1}


def test_verify_length_mismatch_is_a_usage_error(tmp_path):
    graph = tmp_path / "p3.txt"
    graph.write_text(write_graph(path(3)))
    labels = tmp_path / "f.txt"
    labels.write_text("2\n1\n")
    assert invoke("verify", graph, labels).exit_code == 2


def test_reduce_x3c_with_witness(x3c_file, tmp_path):
    out = tmp_path / "split.txt"
    witness = tmp_path / "witness.txt"
    result = invoke("reduce", "x3c", x3c_file, "-o", out, "--cover", "0,2", "--witness", witness)
    assert result.exit_code == 0
    sidecar = json.loads((tmp_path / "split.txt.json").read_text())
    assert sidecar["target"] == 14
    assert sidecar["counts"]["vertices"] == 62
    assert sidecar["counts"]["Y"] == 20
    assert json.loads(result.stdout)["witness_weight"] == 14

    reduced = parse_graph(out.read_text())
    assert reduced.roles[0].kind == "X"
    f = parse_labeling(witness.read_text(), reduced.graph.n)
    assert verify_labeling(reduced.graph, f).valid

    check = invoke("verify", out, witness)
    assert check.exit_code == 0
    assert json.loads(check.stdout)["weight"] == 14


def test_reduce_x3c_rejects_bad_cover(x3c_file, tmp_path):
    result = invoke(
        "reduce", "x3c", x3c_file, "-o", tmp_path / "split.txt", "--cover", "0,1", "--witness", tmp_path / "w.txt"
    )
    assert result.exit_code == 1
    assert json.loads(result.stdout)["error"] == "witness_rejected"


def test_reduce_ds(tmp_path):
    source = tmp_path / "c4.txt"
    source.write_text(write_graph(cycle(4)))
    out = tmp_path / "r3d.txt"
    witness = tmp_path / "w.txt"
    result = invoke("reduce", "ds", source, "-o", out, "--k", "3", "--dominating-set", "0,2", "--witness", witness)
    assert result.exit_code == 0
    sidecar = json.loads(result.stdout)
    assert sidecar["target"] == 36
    assert sidecar["counts"]["vertices"] == 75
    assert sidecar["witness_weight"] == 33


@pytest.mark.parametrize(
    "extra",
    [
        [],
        ["--k", "0"],
        ["--k", "3", "--cover", "0"],
        ["--k", "3", "--dominating-set", "0,2"],
        ["--k", "3", "--dominating-set", "a,b", "--witness", "w.txt"],
    ],
)
def test_reduce_ds_usage_errors(tmp_path, extra):
    source = tmp_path / "c4.txt"
    source.write_text(write_graph(cycle(4)))
    assert invoke("reduce", "ds", source, "-o", tmp_path / "r.txt", *extra).exit_code == 2


def test_reduce_unknown_kind(x3c_file, tmp_path):
    assert invoke("reduce", "sat", x3c_file, "-o", tmp_path / "r.txt").exit_code == 2


def test_gen_block_graph_is_deterministic(tmp_path):
    first = invoke("gen", "block-graph", "--seed", "3", "--n", "20")
    second = invoke("gen", "block-graph", "--seed", "3", "--n", "20")
    assert first.exit_code == 0
    assert first.stdout == second.stdout
    assert parse_graph(first.stdout).graph.n == 20


def test_gen_x3c_to_file(tmp_path):
    out = tmp_path / "inst.x3c"
    result = invoke("gen", "x3c", "--seed", "1", "--q", "4", "--t", "10", "-o", out)
    assert result.exit_code == 0
    assert out.read_text().startswith("x3c 12 10\n")
    assert "# planted" in out.read_text()


@pytest.mark.parametrize(
    "args",
    [
        ["gen", "tree", "--seed", "1"],
        ["gen", "x3c", "--seed", "1", "--q", "3"],
        ["gen", "x3c", "--seed", "1", "--q", "3", "--t", "2"],
        ["gen", "block-graph", "--seed", "1", "--n", "5", "--max-block-size", "1"],
        ["gen", "forest", "--seed", "1", "--n", "5"],
    ],
)
def test_gen_usage_errors(args):
    assert invoke(*args).exit_code == 2


def test_bench_csv(tmp_path):
    result = invoke("bench", "--family", "tree", "--sizes", "8,4", "--repeats", "2")
    assert result.exit_code == 0
    lines = result.stdout.strip().splitlines()
    assert lines[0] == "algorithm,n,m,seed,wall_ms,weight"
    rows = [line.split(",") for line in lines[1:]]
    assert [(row[1], row[3]) for row in rows] == [("4", "0"), ("4", "1"), ("8", "0"), ("8", "1")]
    assert all(row[0] == "block-dp" for row in rows)


def test_bench_brute_refuses_large_sizes():
    assert invoke("bench", "--algo", "brute", "--sizes", "30").exit_code == 1


def test_bench_worker_errors_reach_the_user(monkeypatch):
    monkeypatch.delenv("ROMAN3_BENCH_WORKERS", raising=False)
    result = invoke("bench", "--algo", "brute", "--sizes", "30,31", "--workers", "2")
    assert result.exit_code == 1
    assert "limit is 14" in result.stdout


@pytest.mark.parametrize("sizes", ["", "0", "4,x"])
def test_bench_bad_sizes(sizes):
    assert invoke("bench", "--sizes", sizes).exit_code == 2
