from roman3.formats import parse_x3c
from roman3.graph import Labeling
from roman3.reductions.x3c import (
    X3CInstance,
    extract_cover_from_labeling,
    x3c_to_split,
    x3c_witness_to_labeling,
)
from ..base import ReducedInstance, ReductionComponent

class X3CReductionComponent(ReductionComponent):
    """X3C instance file to a split graph with target 7q."""

    def load(self, text: str) -> X3CInstance:
        return parse_x3c(text)

    def reduce(self, source: X3CInstance) -> ReducedInstance:
        red = x3c_to_split(source)
        return ReducedInstance(red.graph, red.roles, red.target, red.padding, red.counts, red)

    def witness(self, reduced: ReducedInstance, solution: list[int]) -> Labeling:
        return x3c_witness_to_labeling(reduced.reduction, solution)

    def extract(self, reduced: ReducedInstance, f: Labeling) -> set[int]:
        return extract_cover_from_labeling(reduced.reduction, f)
