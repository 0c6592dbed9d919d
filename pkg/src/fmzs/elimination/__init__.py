"""Conflict-driven Gaussian forward elimination and its dense oracle."""

from .algebra import Assignment, BitsetRowAlgebra, FieldRowAlgebra, RowAlgebra, RowAlgebraFactory
from .conflict import (
    Conflict,
    Reduction,
    bucket_rows,
    check_conflict,
    conflict_search,
    find_pivot,
    find_pivot_reordered,
    reduce_with_evidence,
)
from .engine import Pivot, PivotSequence, forward_eliminate
from .fields import GF2, BaseField, FieldCombination, GF2Field
from .oracle import dense_eliminate_oracle, pack_rows

__all__ = [
    "BaseField",
    "GF2Field",
    "GF2",
    "FieldCombination",
    "Assignment",
    "RowAlgebra",
    "BitsetRowAlgebra",
    "FieldRowAlgebra",
    "RowAlgebraFactory",
    "Conflict",
    "Reduction",
    "bucket_rows",
    "conflict_search",
    "check_conflict",
    "reduce_with_evidence",
    "find_pivot",
    "find_pivot_reordered",
    "Pivot",
    "PivotSequence",
    "forward_eliminate",
    "pack_rows",
    "dense_eliminate_oracle",
]
