"""
Core application logic: component registries, solving, reducing, generating
and benchmarking.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass
from pathlib import Path
from typing import Any, Dict, Iterable, Optional, Sequence
import csv
import io
import json
import logging
import os
import time

from roman3.components.base import (
    BaseComponent,
    GeneratorComponent,
    ReducedInstance,
    ReductionComponent,
    SolveResult,
    SolverComponent,
)
from roman3.components.generator.block_graph import BlockGraphGenerator, TreeGenerator
from roman3.components.generator.x3c import X3CGenerator
from roman3.components.reduction.ds import DSReductionComponent
from roman3.components.reduction.x3c import X3CReductionComponent
from roman3.components.solver.block_dp import BlockDPSolver
from roman3.components.solver.bnb import BranchAndBoundSolver
from roman3.components.solver.brute import BruteForceSolver
from roman3.formats import write_graph, write_labeling
from roman3.generators import gen_block_graph, gen_clique, gen_tree
from roman3.graph import Graph

logger = logging.getLogger(__name__)

BENCH_WORKERS_ENV = "ROMAN3_BENCH_WORKERS"

SOLVER_REGISTRY = {
    "block_dp": BlockDPSolver,
    "brute": BruteForceSolver,
    "bnb": BranchAndBoundSolver,
}

REDUCTION_REGISTRY = {
    "x3c": X3CReductionComponent,
    "ds": DSReductionComponent,
}

GENERATOR_REGISTRY = {
    "block_graph": BlockGraphGenerator,
    "tree": TreeGenerator,
    "x3c": X3CGenerator,
}


def generate_component_id(name: str) -> str:
    """Generate a component ID from its name by converting to lowercase and replacing spaces and hyphens with underscores."""
    return name.lower().replace(" ", "_").replace("-", "_")


def create_component(registry: Dict[str, type], config: Dict[str, Any]) -> BaseComponent:
    """Instantiate the registered class for config['id']."""
    component_id = config["id"]
    if component_id not in registry:
        logger.warning(f"Component '{component_id}' not found in registry")
        raise KeyError(f"unknown component '{config.get('name', component_id)}', expected one of {sorted(registry)}")
    return registry[component_id](config)


def solver_config(name: str, **options: Any) -> Dict[str, Any]:
    """Config dict for a solver; options left as None are dropped."""
    config = {"name": name, "id": generate_component_id(name)}
    config.update({key: value for key, value in options.items() if value is not None})
    return config


def run_solver(config: Dict[str, Any], g: Graph) -> SolveResult:
    solver: SolverComponent = create_component(SOLVER_REGISTRY, config)
    start = time.perf_counter()
    result = solver.solve(g)
    wall_ms = (time.perf_counter() - start) * 1000.0
    logger.debug(f"{solver.name} solved n={g.n} m={g.m} with weight {result.weight} in {wall_ms:.1f} ms")
    return SolveResult(result.weight, result.witness, result.algo, result.exact, wall_ms)


def run_reduction(config: Dict[str, Any], source_text: str) -> tuple[ReductionComponent, ReducedInstance]:
    reduction: ReductionComponent = create_component(REDUCTION_REGISTRY, config)
    reduced = reduction.reduce(reduction.load(source_text))
    return reduction, reduced


def write_reduction(
    reduction: ReductionComponent,
    reduced: ReducedInstance,
    output: Path,
    solution: Optional[Sequence[int]] = None,
    witness_path: Optional[Path] = None,
) -> Dict[str, Any]:
    """Write the reduced graph, its JSON sidecar and optionally a witness labeling."""
    output.write_text(write_graph(reduced.graph, reduced.roles))
    sidecar = reduced.sidecar()
    sidecar_path = output.with_name(output.name + ".json")
    sidecar_path.write_text(json.dumps(sidecar, indent=2) + "\n")
    if solution is not None and witness_path is not None:
        labeling = reduction.witness(reduced, list(solution))
        witness_path.write_text(write_labeling(labeling))
        sidecar["witness_weight"] = labeling.weight
    return sidecar


def run_generator(config: Dict[str, Any]) -> str:
    generator: GeneratorComponent = create_component(GENERATOR_REGISTRY, config)
    return generator.generate()


# --- Benchmarks ---

BENCH_HEADER = ("algorithm", "n", "m", "seed", "wall_ms", "weight")


@dataclass(frozen=True)
class BenchRecord:
    algorithm: str
    n: int
    m: int
    seed: int
    wall_ms: float
    weight: int


def bench_graph(family: str, n: int, seed: int, max_block_size: int = 4) -> Graph:
    if family == "clique":
        return gen_clique(n)
    if family == "block":
        return gen_block_graph(seed, n, max_block_size)
    if family == "tree":
        return gen_tree(seed, n)
    raise KeyError(f"unknown bench family '{family}'")


def _bench_task(task: tuple[Dict[str, Any], str, int, int, int]) -> BenchRecord:
    config, family, n, seed, max_block_size = task
    g = bench_graph(family, n, seed, max_block_size)
    result = run_solver(config, g)
    return BenchRecord(config["name"], g.n, g.m, seed, round(result.wall_ms, 3), result.weight)


def bench_workers(requested: int) -> int:
    """Requested worker count, capped by ROMAN3_BENCH_WORKERS when it is set."""
    cap = os.environ.get(BENCH_WORKERS_ENV)
    if cap:
        try:
            return max(1, min(requested, int(cap)))
        except ValueError:
            logger.warning(f"{BENCH_WORKERS_ENV}={cap!r} is not an integer, ignoring it")
    return max(1, requested)


class BenchmarkRunner:
    """Runs one solver over a family of generated graphs and collects BenchRecords."""

    def __init__(self, config: Dict[str, Any], family: str, max_block_size: int = 4, workers: int = 1):
        self.config = config
        self.family = family
        self.max_block_size = max_block_size
        self.workers = bench_workers(workers)

    def tasks(self, sizes: Iterable[int], seed: int, repeats: int = 1) -> list[tuple]:
        return [
            (self.config, self.family, n, seed + r, self.max_block_size)
            for n in sizes
            for r in range(repeats)
        ]

    def run(self, sizes: Iterable[int], seed: int, repeats: int = 1) -> list[BenchRecord]:
        tasks = self.tasks(sizes, seed, repeats)
        if self.workers > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                records = list(pool.map(_bench_task, tasks))
        else:
            records = [_bench_task(task) for task in tasks]
        return sorted(records, key=lambda record: (record.n, record.seed))


def format_bench_csv(records: Iterable[BenchRecord]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(BENCH_HEADER)
    for record in records:
        writer.writerow(astuple(record))
    return buffer.getvalue()
