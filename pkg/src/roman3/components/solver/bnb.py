"""
Branch-and-bound solver component.
"""
from roman3.graph import Graph
from roman3.oracle import branch_and_bound
from ..base import SolveResult, SolverComponent, SupportsBudget, SupportsWarmStart

class BranchAndBoundSolver(SolverComponent, SupportsBudget, SupportsWarmStart):
    """Exact unless the budget runs out, in which case the best labeling found is reported as inexact."""

    def solve(self, g: Graph) -> SolveResult:
        result = branch_and_bound(g, self.budget, self.warm_start)
        return SolveResult(result.weight, result.witness, self.name, exact=result.exact)
