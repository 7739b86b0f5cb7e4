from roman3.errors import ReductionError
from roman3.formats import parse_graph
from roman3.graph import Graph, Labeling
from roman3.reductions.ds import ds_to_r3d, ds_witness_to_labeling, extract_ds_from_labeling
from ..base import ReducedInstance, ReductionComponent

class DSReductionComponent(ReductionComponent):
    """Dominating Set instance (graph file plus k) to a graph with target 12k."""

    @property
    def k(self) -> int:
        k = self.config.get("k")
        if k is None:
            raise ReductionError("the ds reduction needs a parameter k")
        return k

    def load(self, text: str) -> Graph:
        return parse_graph(text).graph

    def reduce(self, source: Graph) -> ReducedInstance:
        red = ds_to_r3d(source, self.k)
        return ReducedInstance(red.graph, red.roles, red.target, red.padding, red.counts, red)

    def witness(self, reduced: ReducedInstance, solution: list[int]) -> Labeling:
        return ds_witness_to_labeling(reduced.reduction, solution)

    def extract(self, reduced: ReducedInstance, f: Labeling) -> set[int]:
        return extract_ds_from_labeling(reduced.reduction, f)
