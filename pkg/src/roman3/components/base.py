"""
Base classes and mixins for solver, reduction and generator components.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from roman3.graph import Graph, Labeling
from roman3.oracle import SearchBudget
from roman3.reductions.roles import Role

# --- Core Base Class ---

class BaseComponent(ABC):
    """Minimal abstract base class for all components."""

    def __init__(self, config: Dict[str, Any]):
        """Initializes the component with its specific configuration."""
        self.config = config

    @property
    def id(self) -> str:
        """The unique identifier for the component."""
        return self.config["id"]

# --- Capability Mixins ---

class SupportsBudget(ABC):
    """Mixin for solvers whose search can be cut off by a node or time limit."""

    @property
    def budget(self) -> SearchBudget:
        return SearchBudget(
            node_limit=self.config.get("node_limit"),
            time_limit_ms=self.config.get("time_limit_ms"),
        )

class SupportsWarmStart(ABC):
    """Mixin for solvers that accept a known labeling as their first incumbent."""

    @property
    def warm_start(self) -> Optional[Labeling]:
        return self.config.get("warm_start")

# --- Results ---

@dataclass(frozen=True)
class SolveResult:
    weight: int
    witness: Labeling
    algo: str
    exact: bool
    wall_ms: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "weight": self.weight,
            "labels": list(self.witness.labels),
            "algo": self.algo,
            "exact": self.exact,
            "wall_ms": round(self.wall_ms, 3),
        }

@dataclass(frozen=True)
class ReducedInstance:
    """A reduced graph with its roles and the numbers written to the sidecar."""

    graph: Graph
    roles: tuple[Role, ...]
    target: int
    padding: Dict[str, int]
    counts: Dict[str, int]
    reduction: Any = field(repr=False, compare=False, default=None)

    def sidecar(self) -> Dict[str, Any]:
        return {
            "target": self.target,
            "padding": self.padding,
            "counts": {"vertices": self.graph.n, "edges": self.graph.m, **self.counts},
        }

# --- High-Level Abstract Components ---

class SolverComponent(BaseComponent):
    """Abstract base class for Roman {3}-domination solvers."""

    @property
    def name(self) -> str:
        return self.config.get("name", self.id)

    @abstractmethod
    def solve(self, g: Graph) -> SolveResult:
        """Returns an optimal (or best found) labeling of g; wall_ms is filled in by the caller."""
        pass

class ReductionComponent(BaseComponent):
    """Abstract base class for hardness reductions."""

    @abstractmethod
    def load(self, text: str) -> Any:
        """Parses the source instance file."""
        pass

    @abstractmethod
    def reduce(self, source: Any) -> ReducedInstance:
        pass

    @abstractmethod
    def witness(self, reduced: ReducedInstance, solution: List[int]) -> Labeling:
        """Maps a source solution (cover or dominating set) to a labeling of the reduced graph."""
        pass

    @abstractmethod
    def extract(self, reduced: ReducedInstance, f: Labeling) -> set[int]:
        """Maps a labeling of the reduced graph back to a source solution."""
        pass

class GeneratorComponent(BaseComponent):
    """Abstract base class for seeded instance generators."""

    @property
    def seed(self) -> int:
        return self.config.get("seed", 0)

    @abstractmethod
    def generate(self) -> str:
        """Returns the rendered instance file."""
        pass
