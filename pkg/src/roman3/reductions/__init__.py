"""Hardness constructions with witness maps in both directions."""

from roman3.reductions.ds import (
    DSReduction,
    check_ds_structure,
    ds_to_r3d,
    ds_witness_to_labeling,
    extract_ds_from_labeling,
)
from roman3.reductions.roles import Role, parse_tag
from roman3.reductions.x3c import (
    SplitReduction,
    X3CInstance,
    check_split_structure,
    extract_cover_from_labeling,
    x3c_to_split,
    x3c_witness_to_labeling,
)

__all__ = [
    "DSReduction",
    "Role",
    "SplitReduction",
    "X3CInstance",
    "check_ds_structure",
    "check_split_structure",
    "ds_to_r3d",
    "ds_witness_to_labeling",
    "extract_cover_from_labeling",
    "extract_ds_from_labeling",
    "parse_tag",
    "x3c_to_split",
    "x3c_witness_to_labeling",
]
