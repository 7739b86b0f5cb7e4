from roman3.graph import Graph
from roman3.oracle import BRUTE_FORCE_LIMIT, brute_force
from ..base import SolveResult, SolverComponent

class BruteForceSolver(SolverComponent):
    """Exhaustive enumeration, limited to small graphs."""

    def solve(self, g: Graph) -> SolveResult:
        solution = brute_force(g, limit=self.config.get("limit", BRUTE_FORCE_LIMIT))
        return SolveResult(solution.weight, solution.witness, self.name, exact=True)
