"""Conflict search and evidence reduction.

To decide whether the span of the rows and pivots p_1 .. p_{j-1} holds a
combination with leading column j, the search fixes x_j = 1 and every later
variable to 0, then walks down the pivot columns. At a pivot column c it first
sets x_c to the one value that makes p_c vanish, then looks among the rows
led by c for one that does not vanish under the partial assignment. Such a
row is evidence: reducing it by the pivots it meets yields a row led by j.
When no row conflicts all the way down, no such combination exists.

Columns below j without a pivot (deficient columns) are treated as if moved
past j: they stay at zero, are skipped when finding a row's leading column,
and the walk steps over them.
"""

import logging
from dataclasses import dataclass
from typing import Any, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..errors import InvariantError
from .algebra import Assignment, RowAlgebra

logger = logging.getLogger(__name__)

Candidate = Tuple[int, Any]


@dataclass(frozen=True)
class Conflict:
    """A row that does not vanish under a search assignment.

    Attributes:
        row_id: 1-based id of the input row
        row: The row itself
        assignment: Assignment K_i at the moment of the conflict
    """

    row_id: int
    row: Any
    assignment: Assignment

    @property
    def frontier(self) -> int:
        return self.assignment.frontier


@dataclass(frozen=True)
class Reduction:
    """Result of reducing a conflict row.

    Attributes:
        row: Combination led by the target column
        source_row: Input row the reduction started from
        reducers: ``(column, factor)`` pairs; row = source - sum(factor * p_column)
    """

    row: Any
    source_row: int
    reducers: Tuple[Tuple[int, Any], ...]


def bucket_rows(
    rows: Sequence[Any],
    algebra: RowAlgebra,
    deficient: Iterable[int] = (),
    limit: Optional[int] = None,
) -> Mapping[int, List[Candidate]]:
    """Group non-zero rows by leading column, ignoring deficient columns.

    Args:
        rows: Rows; ids are 1-based positions
        algebra: Row algebra
        deficient: Columns to skip when finding the leading column
        limit: Drop rows led by a column above this

    Returns:
        Leading column to ``(row_id, row)`` lists in ascending id order
    """
    skip = algebra.skip_mask(deficient)
    buckets: dict = {}
    for row_id, row in enumerate(rows, start=1):
        if algebra.is_zero(row):
            continue
        lead = algebra.lead(row, skip)
        if lead > algebra.n or (limit is not None and lead > limit):
            continue
        buckets.setdefault(lead, []).append((row_id, row))
    return buckets


def _descending_pivots(pivots: Mapping[int, Any], target: int, deficient: frozenset) -> List[int]:
    return sorted((c for c in pivots if c < target and c not in deficient), reverse=True)


def conflict_search(
    candidates: Mapping[int, Sequence[Candidate]],
    pivots: Mapping[int, Any],
    target: int,
    algebra: RowAlgebra,
    deficient: Iterable[int] = (),
    debug_checks: bool = False,
    descending_columns: Optional[Sequence[int]] = None,
) -> Optional[Conflict]:
    """Search for a row that conflicts with the pivots below ``target``.

    Args:
        candidates: Rows grouped by (deficient-skipping) leading column,
            each group in ascending id order
        pivots: Pivot rows by column; only columns below ``target`` are used
        target: Column j
        algebra: Row algebra
        deficient: Columns below ``target`` without a pivot
        debug_checks: Assert the conflict conditions before returning
        descending_columns: Pivot columns below ``target`` in descending
            order, when the caller already has them

    Returns:
        The first conflict found, or None when the search fails
    """
    deficient = frozenset(deficient)
    field_ = algebra.field
    assignment = Assignment.start(target, field_.one)
    if descending_columns is None:
        descending_columns = _descending_pivots(pivots, target, deficient)

    column = target
    step = 0
    while True:
        for row_id, row in candidates.get(column, ()):
            if not field_.is_zero(algebra.evaluate(row, assignment)):
                conflict = Conflict(row_id, row, assignment)
                if debug_checks:
                    check_conflict(conflict, pivots, algebra, deficient)
                return conflict
        if step == len(descending_columns):
            return None
        column = descending_columns[step]
        step += 1
        assignment.assign(column, algebra.solve_for(pivots[column], column, assignment), field_)


def check_conflict(conflict: Conflict, pivots: Mapping[int, Any], algebra: RowAlgebra, deficient: Iterable[int] = ()) -> None:
    """Assert the four output conditions of a conflict.

    (a) the row is led by the frontier column; (b) x_j = 1, later and
    deficient variables are zero, nothing below the frontier is assigned;
    (c) the row does not vanish; (d) every pivot from the frontier up to
    ``j - 1`` vanishes.

    Raises:
        InvariantError: If a condition fails
    """
    deficient = frozenset(deficient)
    field_ = algebra.field
    a = conflict.assignment
    i, j = a.frontier, a.target
    skip = algebra.skip_mask(deficient)
    if algebra.lead(conflict.row, skip) != i:
        raise InvariantError(f"conflict row {conflict.row_id} is not led by column {i}")
    if not field_.equal(a.value(j, field_), field_.one):
        raise InvariantError(f"x_{j} is not one in the conflict assignment")
    stray = [c for c in a.values if c > j or c < i or c in deficient]
    if stray:
        raise InvariantError(f"assignment sets columns {sorted(stray)} outside the search range")
    if field_.is_zero(algebra.evaluate(conflict.row, a)):
        raise InvariantError(f"conflict row {conflict.row_id} vanishes under its assignment")
    for column, pivot in pivots.items():
        if i <= column < j and column not in deficient and not field_.is_zero(algebra.evaluate(pivot, a)):
            raise InvariantError(f"pivot at column {column} does not vanish under the conflict assignment")


def reduce_with_evidence(
    conflict: Conflict,
    pivots: Mapping[int, Any],
    algebra: RowAlgebra,
    deficient: Iterable[int] = (),
) -> Reduction:
    """Reduce a conflict row by the pivots from its frontier up to the target.

    Whenever the row's leading column h is a pivot column below the target,
    the pivot is subtracted so that column h clears.

    Returns:
        Reduction whose row is led by the target column

    Raises:
        InvariantError: If the reduced row is not led by the target column
    """
    deficient = frozenset(deficient)
    skip = algebra.skip_mask(deficient)
    target = conflict.assignment.target
    row = conflict.row
    reducers = []
    for column in sorted(c for c in pivots if conflict.frontier <= c < target and c not in deficient):
        if algebra.lead(row, skip) == column:
            row, factor = algebra.eliminate(row, pivots[column], column)
            reducers.append((column, factor))
    lead = algebra.lead(row, skip)
    if lead != target:
        raise InvariantError(
            f"reduction of row {conflict.row_id} is led by column {lead}, expected {target}"
        )
    return Reduction(row, conflict.row_id, tuple(reducers))


def find_pivot(
    rows: Sequence[Any],
    pivots: Mapping[int, Any],
    target: int,
    algebra: RowAlgebra,
    debug_checks: bool = False,
) -> Optional[Reduction]:
    """Find a combination led by ``target`` in the span of rows and pivots.

    Args:
        rows: Input rows (ids are 1-based positions)
        pivots: Pivots at every column below ``target``
        target: Column j
        algebra: Row algebra
        debug_checks: Assert conflict conditions

    Returns:
        Reduction led by ``target``, or None when no such combination exists

    Raises:
        ValueError: If a column below ``target`` has no pivot
    """
    missing = [c for c in range(1, target) if c not in pivots]
    if missing:
        raise ValueError(f"columns {missing} below {target} have no pivot; use find_pivot_reordered")
    candidates = bucket_rows(rows, algebra, limit=target)
    conflict = conflict_search(candidates, pivots, target, algebra, debug_checks=debug_checks)
    if conflict is None:
        return None
    return reduce_with_evidence(conflict, pivots, algebra)


def find_pivot_reordered(
    rows: Sequence[Any],
    pivots: Mapping[int, Any],
    target: int,
    algebra: RowAlgebra,
    debug_checks: bool = False,
) -> Optional[Reduction]:
    """Like ``find_pivot`` when some columns below ``target`` lack a pivot.

    The deficient columns are moved past ``target`` in a column-order view,
    the search runs in that view, and the result is reported in the original
    order. The result is led (originally) by ``target`` or by a deficient
    column.
    """
    deficient = frozenset(c for c in range(1, target) if c not in pivots)
    candidates = bucket_rows(rows, algebra, deficient, limit=target)
    conflict = conflict_search(candidates, pivots, target, algebra, deficient, debug_checks)
    if conflict is None:
        return None
    return reduce_with_evidence(conflict, pivots, algebra, deficient)


__all__ = [
    "Conflict",
    "Reduction",
    "bucket_rows",
    "conflict_search",
    "check_conflict",
    "reduce_with_evidence",
    "find_pivot",
    "find_pivot_reordered",
]
