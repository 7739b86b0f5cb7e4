"""
Exception hierarchy shared by the solvers, reductions and file formats.
"""

from typing import Any, Optional


class Roman3Error(Exception):
    """Base class for every error raised by roman3."""

    # Constructor arguments of subclasses, replayed when unpickling.
    _init_args: Optional[tuple] = None

    def __reduce__(self):
        if self._init_args is None:
            return super().__reduce__()
        return type(self), self._init_args


class GraphError(Roman3Error, ValueError):
    """A graph could not be built from the given vertices and edges."""


class LabelingError(Roman3Error, ValueError):
    """A labeling does not fit the graph it is applied to."""


class NotBlockGraphError(Roman3Error):
    """Raised by the block-graph DP when some block is not a clique."""

    def __init__(self, block: frozenset[int]):
        self._init_args = (block,)
        self.block = block
        super().__init__(f"block {sorted(block)} does not induce a clique")


class InstanceTooLargeError(Roman3Error):
    """The instance exceeds what an exhaustive oracle is allowed to enumerate."""

    def __init__(self, n: int, limit: int, suggestion: Optional[str] = None):
        self._init_args = (n, limit, suggestion)
        self.n = n
        self.limit = limit
        self.suggestion = suggestion
        message = f"instance has {n} vertices, limit is {limit}"
        if suggestion:
            message += f"; use {suggestion} instead"
        super().__init__(message)


class ReductionError(Roman3Error):
    """A witness was rejected by a reduction."""


class WitnessStructureError(ReductionError):
    """A valid labeling did not have the structure needed to extract a witness."""

    def __init__(self, condition: str, detail: Any = None):
        self._init_args = (condition, detail)
        self.condition = condition
        self.detail = detail
        message = condition if detail is None else f"{condition}: {detail}"
        super().__init__(message)


class FormatError(Roman3Error):
    """A malformed instance, labeling or role line."""

    def __init__(self, line: int, message: str):
        self._init_args = (line, message)
        self.line = line
        super().__init__(f"line {line}: {message}")


class DPConsistencyError(AssertionError):
    """Replaying the recorded DP choices did not reproduce a stored weight."""


class InstanceError(Roman3Error, ValueError):
    """An X3C instance with a malformed triple or universe."""


class NotExactCoverError(ReductionError):
    def __init__(self, uncovered: list[int], doubly_covered: list[int]):
        self._init_args = (uncovered, doubly_covered)
        self.uncovered = uncovered
        self.doubly_covered = doubly_covered
        super().__init__(
            f"cover is not exact: uncovered elements {uncovered}, doubly covered elements {doubly_covered}"
        )


class NotDominatingError(ReductionError):
    def __init__(self, vertex: int):
        self._init_args = (vertex,)
        self.vertex = vertex
        super().__init__(f"vertex {vertex} is not dominated")
