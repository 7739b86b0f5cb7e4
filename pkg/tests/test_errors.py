import pickle

import pytest

from roman3.errors import (
    FormatError,
    GraphError,
    InstanceTooLargeError,
    NotBlockGraphError,
    NotDominatingError,
    NotExactCoverError,
    WitnessStructureError,
)


@pytest.mark.parametrize(
    "error",
    [
        GraphError("self-loop (1, 1)"),
        NotBlockGraphError(frozenset({0, 1, 2, 3})),
        InstanceTooLargeError(30, 14, "branch_and_bound"),
        WitnessStructureError("positive vertices do not dominate", {"undominated": 3}),
        FormatError(4, "expected 2 integers"),
        NotExactCoverError([4, 5], [0, 1]),
        NotDominatingError(2),
    ],
    ids=lambda error: type(error).__name__,
)
def test_errors_survive_pickling(error):
    copy = pickle.loads(pickle.dumps(error))
    assert type(copy) is type(error)
    assert str(copy) == str(error)
    assert vars(copy) == vars(error)


def test_format_error_keeps_line():
    error = pickle.loads(pickle.dumps(FormatError(7, "bad triple")))
    assert error.line == 7
    assert str(error) == "line 7: bad triple"
