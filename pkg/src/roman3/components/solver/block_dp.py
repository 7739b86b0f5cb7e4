from roman3.block_dp import solve_block_graph
from roman3.graph import Graph
from ..base import SolveResult, SolverComponent

class BlockDPSolver(SolverComponent):
    """Exact solver for block graphs; rejects graphs with a non-clique block."""

    @property
    def triple_search(self) -> str:
        return self.config.get("triple_search", "enumerate")

    def solve(self, g: Graph) -> SolveResult:
        solution = solve_block_graph(g, triple_search=self.triple_search)
        return SolveResult(solution.weight, solution.witness, self.name, exact=True)
