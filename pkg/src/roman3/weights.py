"""
Extended weights: non-negative integers plus a saturating INFEASIBLE value.
"""

from functools import total_ordering
from typing import Iterable, Union


@total_ordering
class _Infeasible:
    """Absorbing element for addition, larger than every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFEASIBLE"

    def __reduce__(self):
        return (_Infeasible, ())

    def __add__(self, other):
        if isinstance(other, (int, _Infeasible)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __eq__(self, other) -> bool:
        return other is self

    def __lt__(self, other) -> bool:
        if isinstance(other, (int, _Infeasible)):
            return False
        return NotImplemented

    def __gt__(self, other) -> bool:
        if isinstance(other, int):
            return True
        if isinstance(other, _Infeasible):
            return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash("INFEASIBLE")


INFEASIBLE = _Infeasible()

ExtWeight = Union[int, _Infeasible]


def ext_sum(values: Iterable[ExtWeight]) -> ExtWeight:
    total = 0
    for w in values:
        if w is INFEASIBLE:
            return INFEASIBLE
        total += w
    return total
