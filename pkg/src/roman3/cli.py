"""
Command-line interface: solve, verify, reduce, gen and bench.

Exit codes: 0 success (or a valid labeling), 1 well-formed input that is
rejected (invalid labeling, non-block graph, instance too large, rejected
witness), 2 usage or parse errors.
"""

from pathlib import Path
from typing import Any, Dict, Optional
import logging

import typer
from rich.console import Console
from rich.panel import Panel

from roman3.errors import (
    FormatError,
    GraphError,
    InstanceError,
    InstanceTooLargeError,
    LabelingError,
    NotBlockGraphError,
    ReductionError,
)
from roman3.formats import read_graph, read_labeling, write_labeling
from roman3.graph import verify_labeling
from roman3.main import (
    BenchmarkRunner,
    format_bench_csv,
    generate_component_id,
    run_generator,
    run_reduction,
    run_solver,
    solver_config,
    write_reduction,
)

# Configure logging
logging.basicConfig(level=logging.WARNING)
logger = logging.getLogger(__name__)

# Initialize rich console
console = Console()

EXIT_REJECTED = 1
EXIT_USAGE = 2

# Component options
ALGORITHMS = {
    "block-dp": {"description": "Nine-state dynamic programming, exact on block graphs", "budgeted": False},
    "brute": {"description": "Exhaustive enumeration for graphs with at most 14 vertices", "budgeted": False},
    "bnb": {"description": "Branch-and-bound, exact unless its budget runs out", "budgeted": True},
}

REDUCTIONS = {
    "x3c": {"description": "Exact 3-Cover to a split graph with target 7q", "parameter": None},
    "ds": {"description": "Dominating Set with parameter k to a graph with target 12k", "parameter": "k"},
}

GENERATORS = {
    "block-graph": {"description": "Random connected block graph", "needs": ("n",)},
    "tree": {"description": "Random tree", "needs": ("n",)},
    "x3c": {"description": "X3C instance with a planted exact cover", "needs": ("q", "t")},
}

BENCH_FAMILIES = {
    "clique": {"description": "Complete graph K_n, one block of size n"},
    "block": {"description": "Random block graphs"},
    "tree": {"description": "Random trees"},
}

TRIPLE_SEARCHES = {
    "enumerate": {"description": "Try every triple of children"},
    "smallest": {"description": "Take the three cheapest children"},
}


def format_choices(options: dict) -> list[str]:
    """Format choices with descriptions for help and error messages."""
    return [f"{k} - {v['description']}" for k, v in options.items()]


def check_choice(value: str, options: dict, option_name: str) -> str:
    if value not in options:
        raise typer.BadParameter(
            f"'{value}' is not one of:\n  " + "\n  ".join(format_choices(options)),
            param_hint=option_name,
        )
    return value


def parse_int_list(text: str, option_name: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise typer.BadParameter(f"expected comma-separated integers, got '{text}'", param_hint=option_name)


def fail(error: Exception, code: int, payload: Optional[Dict[str, Any]] = None) -> None:
    """Report an error (as JSON when payload is given) and exit with code."""
    logger.error(str(error))
    if payload is not None:
        console.print_json(data={**payload, "message": str(error)})
    else:
        console.print(f"[bold red]Error:[/bold red] {error}")
    raise typer.Exit(code)


app = typer.Typer(
    add_completion=False,
    help="Exact solvers, oracles and reduction generators for Roman {3}-domination.",
)


@app.callback()
def configure(verbose: bool = typer.Option(False, "--verbose", "-v", help="Log at DEBUG level.")):
    logging.getLogger().setLevel(logging.DEBUG if verbose else logging.WARNING)


@app.command()
def solve(
    graph_file: Path = typer.Argument(..., exists=True, dir_okay=False, help="Graph file."),
    algo: str = typer.Option("block-dp", "--algo", help="block-dp, brute or bnb."),
    budget_ms: Optional[float] = typer.Option(None, "--budget-ms", help="Time limit for bnb."),
    node_limit: Optional[int] = typer.Option(None, "--node-limit", help="Search node limit for bnb."),
    triple_search: str = typer.Option("enumerate", "--triple-search", help="Triple search of block-dp."),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Also write the labeling here."),
    pretty: bool = typer.Option(False, "--pretty", help="Print a summary panel instead of JSON."),
):
    """Solve a graph file and print {weight, labels, algo, exact, wall_ms}."""
    check_choice(algo, ALGORITHMS, "--algo")
    check_choice(triple_search, TRIPLE_SEARCHES, "--triple-search")
    if not ALGORITHMS[algo]["budgeted"] and (budget_ms is not None or node_limit is not None):
        raise typer.BadParameter(f"--budget-ms and --node-limit only apply to bnb, not {algo}")

    try:
        g = read_graph(graph_file).graph
    except FormatError as e:
        fail(e, EXIT_USAGE)

    config = solver_config(algo, time_limit_ms=budget_ms, node_limit=node_limit)
    if algo == "block-dp":
        config["triple_search"] = triple_search
    try:
        result = run_solver(config, g)
    except NotBlockGraphError as e:
        fail(e, EXIT_REJECTED, {"error": "not_block_graph", "block": sorted(e.block)})
    except InstanceTooLargeError as e:
        fail(e, EXIT_REJECTED, {"error": "instance_too_large", "n": e.n, "limit": e.limit, "suggestion": e.suggestion})

    if output is not None:
        output.write_text(write_labeling(result.witness))
    if pretty:
        summary = [
            "[bold green]Roman {3}-domination[/bold green]",
            "",
            f"• Graph: [cyan]{graph_file.name}[/cyan] (n={g.n}, m={g.m})",
            f"• Algorithm: [cyan]{algo}[/cyan] - {ALGORITHMS[algo]['description']}",
            f"• Weight: [cyan]{result.weight}[/cyan] ({'exact' if result.exact else 'upper bound'})",
            f"• Positive labels: [cyan]{len(result.witness.support())}[/cyan]",
            f"• Wall time: [cyan]{result.wall_ms:.1f} ms[/cyan]",
        ]
        console.print(Panel("\n".join(summary), title="[bold]Solution[/bold]", expand=False))
    else:
        console.print_json(data=result.to_dict())


@app.command()
def verify(
    graph_file: Path = typer.Argument(..., exists=True, dir_okay=False),
    labeling_file: Path = typer.Argument(..., exists=True, dir_okay=False),
):
    """Check a labeling; exit code 0 iff it is a Roman {3}-dominating function."""
    try:
        g = read_graph(graph_file).graph
        f = read_labeling(labeling_file, g.n)
    except (FormatError, LabelingError) as e:
        fail(e, EXIT_USAGE)
    report = verify_labeling(g, f)
    console.print_json(data={"weight": f.weight, **report.to_dict()})
    if not report.valid:
        raise typer.Exit(EXIT_REJECTED)


@app.command("reduce")
def reduce_instance(
    kind: str = typer.Argument(..., help="x3c or ds."),
    instance_file: Path = typer.Argument(..., exists=True, dir_okay=False),
    output: Path = typer.Option(..., "--output", "-o", help="Reduced graph file; the sidecar goes to OUTPUT.json."),
    k: Optional[int] = typer.Option(None, "--k", help="Solution size bound for ds."),
    cover: Optional[str] = typer.Option(None, "--cover", help="Comma-separated triple indices (x3c)."),
    dominating_set: Optional[str] = typer.Option(None, "--dominating-set", help="Comma-separated vertices (ds)."),
    witness: Optional[Path] = typer.Option(None, "--witness", help="Write the mapped witness labeling here."),
):
    """Reduce an X3C or Dominating Set instance to Roman {3}-domination."""
    check_choice(kind, REDUCTIONS, "KIND")
    if kind == "ds" and k is None:
        raise typer.BadParameter("the ds reduction needs --k", param_hint="--k")
    if kind == "x3c" and k is not None:
        raise typer.BadParameter("--k only applies to the ds reduction", param_hint="--k")
    if (kind == "x3c" and dominating_set is not None) or (kind == "ds" and cover is not None):
        raise typer.BadParameter("--cover goes with x3c and --dominating-set with ds")
    given = cover if kind == "x3c" else dominating_set
    if (given is None) != (witness is None):
        raise typer.BadParameter("--witness needs a --cover or --dominating-set and vice versa")
    solution = parse_int_list(given, "--cover/--dominating-set") if given is not None else None

    config = {"name": kind, "id": generate_component_id(kind), "k": k}
    try:
        reduction, reduced = run_reduction(config, instance_file.read_text())
    except (FormatError, GraphError, InstanceError) as e:
        fail(e, EXIT_USAGE)
    try:
        sidecar = write_reduction(reduction, reduced, output, solution, witness)
    except ReductionError as e:
        fail(e, EXIT_REJECTED, {"error": "witness_rejected"})
    console.print_json(data=sidecar)


@app.command()
def gen(
    kind: str = typer.Argument(..., help="block-graph, x3c or tree."),
    seed: int = typer.Option(..., "--seed", help="Seed of the generator's random.Random."),
    n: Optional[int] = typer.Option(None, "--n", help="Vertex count (block-graph, tree)."),
    max_block_size: int = typer.Option(4, "--max-block-size", help="Largest clique (block-graph)."),
    q: Optional[int] = typer.Option(None, "--q", help="Universe size / 3 (x3c)."),
    t: Optional[int] = typer.Option(None, "--t", help="Number of triples (x3c)."),
    output: Optional[Path] = typer.Option(None, "--output", "-o"),
):
    """Generate a seeded instance file."""
    check_choice(kind, GENERATORS, "KIND")
    options = {"n": n, "q": q, "t": t}
    for name in GENERATORS[kind]["needs"]:
        if options[name] is None:
            raise typer.BadParameter(f"{kind} needs --{name}", param_hint=f"--{name}")
    if kind == "block-graph" and max_block_size < 2:
        raise typer.BadParameter("must be at least 2", param_hint="--max-block-size")

    config = {"name": kind, "id": generate_component_id(kind), "seed": seed, "max_block_size": max_block_size}
    config.update({key: value for key, value in options.items() if value is not None})
    try:
        text = run_generator(config)
    except InstanceError as e:
        raise typer.BadParameter(str(e))
    if output is None:
        typer.echo(text, nl=False)
    else:
        output.write_text(text)


@app.command()
def bench(
    algo: str = typer.Option("block-dp", "--algo"),
    family: str = typer.Option("clique", "--family", help="clique, block or tree."),
    sizes: str = typer.Option(..., "--sizes", help="Comma-separated vertex counts."),
    seed: int = typer.Option(0, "--seed"),
    repeats: int = typer.Option(1, "--repeats", min=1),
    workers: int = typer.Option(1, "--workers", min=1),
    triple_search: str = typer.Option("enumerate", "--triple-search"),
    max_block_size: int = typer.Option(4, "--max-block-size", min=2),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="CSV file; stdout when omitted."),
):
    """Time a solver over generated graphs and emit CSV (algorithm,n,m,seed,wall_ms,weight)."""
    check_choice(algo, ALGORITHMS, "--algo")
    check_choice(family, BENCH_FAMILIES, "--family")
    check_choice(triple_search, TRIPLE_SEARCHES, "--triple-search")
    size_list = parse_int_list(sizes, "--sizes")
    if not size_list or any(size < 1 for size in size_list):
        raise typer.BadParameter("sizes must be positive", param_hint="--sizes")

    config = solver_config(algo)
    if algo == "block-dp":
        config["triple_search"] = triple_search
    runner = BenchmarkRunner(config, family, max_block_size, workers)
    try:
        records = runner.run(size_list, seed, repeats)
    except InstanceTooLargeError as e:
        fail(e, EXIT_REJECTED)
    text = format_bench_csv(records)
    if output is None:
        typer.echo(text, nl=False)
    else:
        output.write_text(text)


def main():
    """Main CLI entrypoint."""
    app()


if __name__ == "__main__":
    main()
