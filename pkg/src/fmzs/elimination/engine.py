"""Conflict-driven forward elimination.

Columns are visited left to right. An unconsumed input row led by the current
column becomes its pivot directly (lowest row id first). Otherwise a conflict
search over the remaining rows, with the pivotless columns so far treated as
deficient, either produces a new pivot or proves that none exists. Every
pivot remembers the input row it consumed and the earlier pivots it was
reduced by, so it can be expanded back into input rows.
"""

import logging
import time
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from ..config import RunConfig, get_run_config
from ..errors import InvariantError
from ..systems import Gf2Combination, LinearSystem
from .algebra import RowAlgebra, RowAlgebraFactory
from .conflict import conflict_search, reduce_with_evidence
from .fields import BaseField

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Pivot:
    """A pivot combination.

    Attributes:
        column: Its leading column
        row: Combination in the algebra's row representation
        source_row: 1-based id of the input row it consumed
        reducers: ``(column, factor)`` pairs; row = source - sum(factor * p_column)
    """

    column: int
    row: Any
    source_row: int
    reducers: Tuple[Tuple[int, Any], ...] = ()


class PivotSequence:
    """Echelon output of the elimination.

    Attributes:
        n: Number of columns
        algebra: Row algebra the pivots live in
        pivots: Pivot by column
        pivotless: Ascending columns without a pivot
    """

    def __init__(self, n: int, algebra: RowAlgebra, pivots: Dict[int, Pivot], pivotless: Sequence[int]):
        self.n = n
        self.algebra = algebra
        self.pivots = pivots
        self.pivotless: Tuple[int, ...] = tuple(pivotless)

    @property
    def field(self) -> BaseField:
        return self.algebra.field

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def corank(self) -> int:
        return self.n - len(self.pivots)

    @property
    def pivot_columns(self) -> Tuple[int, ...]:
        return tuple(sorted(self.pivots))

    def has_pivot(self, column: int) -> bool:
        return column in self.pivots

    def consumed_rows(self) -> Dict[int, int]:
        """Input row id consumed by the pivot of each column."""
        return {column: pivot.source_row for column, pivot in sorted(self.pivots.items())}

    def support(self, column: int) -> Gf2Combination:
        return Gf2Combination(self.algebra.support(self.pivots[column].row))

    def bits(self, column: int) -> int:
        return self.algebra.to_bits(self.pivots[column].row)

    def expand(self, column: int) -> Dict[int, Any]:
        """Write a pivot as a combination of input rows.

        Returns:
            Input row id to non-zero coefficient
        """
        field_ = self.field
        needed = []
        stack = [column]
        seen = set()
        while stack:
            current = stack.pop()
            if current in seen:
                continue
            seen.add(current)
            needed.append(current)
            stack.extend(c for c, _ in self.pivots[current].reducers)

        expansions: Dict[int, Dict[int, Any]] = {}
        # reducers always sit at smaller columns
        for current in sorted(needed):
            pivot = self.pivots[current]
            combination = {pivot.source_row: field_.one}
            for reducer, factor in pivot.reducers:
                scale = field_.negate(factor)
                for row_id, value in expansions[reducer].items():
                    updated = field_.add(combination.get(row_id, field_.zero), field_.multiply(scale, value))
                    if field_.is_zero(updated):
                        combination.pop(row_id, None)
                    else:
                        combination[row_id] = updated
            expansions[current] = combination
        return expansions[column]

    def expand_rows(self, column: int) -> Tuple[int, ...]:
        """Ascending ids of the input rows in ``expand(column)``."""
        return tuple(sorted(self.expand(column)))

    def dumps(self) -> str:
        """Pivot dump: ``<column> <source row> : <support ids>`` per pivot."""
        lines = [f"# n={self.n} rank={self.rank} corank={self.corank}"]
        for column in self.pivot_columns:
            pivot = self.pivots[column]
            support = " ".join(str(c) for c in self.algebra.support(pivot.row))
            lines.append(f"{column} {pivot.source_row} : {support}")
        lines.append("# pivotless " + " ".join(str(c) for c in self.pivotless))
        return "\n".join(lines) + "\n"


def _check_echelon(sequence: PivotSequence) -> None:
    algebra = sequence.algebra
    for column, pivot in sequence.pivots.items():
        if algebra.lead(pivot.row) != column:
            raise InvariantError(f"pivot stored at column {column} is led by {algebra.lead(pivot.row)}")
    if set(sequence.pivots) & set(sequence.pivotless):
        raise InvariantError("a column is both pivot and pivotless")
    if len(sequence.pivots) + len(sequence.pivotless) != sequence.n:
        raise InvariantError("pivot and pivotless columns do not cover every column")
    sources = [pivot.source_row for pivot in sequence.pivots.values()]
    if len(set(sources)) != len(sources):
        raise InvariantError("an input row was consumed by two pivots")


def forward_eliminate(
    system: Union[LinearSystem, Sequence[Sequence[int]]],
    algebra: Union[str, RowAlgebra, None] = "auto",
    field_: Optional[BaseField] = None,
    n: Optional[int] = None,
    debug_checks: Optional[bool] = None,
    config: Optional[RunConfig] = None,
) -> PivotSequence:
    """Row-echelon pivots of a linear system by conflict-driven elimination.

    Args:
        system: A LinearSystem, or raw supports (then ``n`` is required)
        algebra: ``"auto"``, ``"bitset"``, ``"field"`` or a RowAlgebra
        field_: Coefficient field, GF(2) by default
        n: Column count for raw supports
        debug_checks: Assert conflict conditions and the echelon property;
            config ``debug_checks`` by default
        config: Run configuration; the global one when omitted

    Returns:
        PivotSequence with a pivot at column j exactly when the row space has
        a combination led by j
    """
    if debug_checks is None:
        debug_checks = (config or get_run_config()).debug_checks
    if isinstance(system, LinearSystem):
        n = system.column_count
        supports: List[Sequence[int]] = [row.combination.support for row in system.rows]
    else:
        if n is None:
            raise ValueError("n is required when eliminating raw supports")
        supports = [tuple(s) for s in system]
    algebra = RowAlgebraFactory.create(n, algebra, field_)
    started = time.perf_counter()

    buckets: Dict[int, List[Tuple[int, Any]]] = {}
    for row_id, support in enumerate(supports, start=1):
        row = algebra.make_row(support)
        if algebra.is_zero(row):
            continue
        buckets.setdefault(algebra.lead(row), []).append((row_id, row))

    pivots: Dict[int, Pivot] = {}
    pivot_rows: Dict[int, Any] = {}
    descending: List[int] = []
    pivotless: List[int] = []
    searches = 0

    for j in range(1, n + 1):
        direct = buckets.get(j)
        if direct:
            row_id, row = direct.pop(0)
            pivots[j] = Pivot(j, row, row_id)
        elif descending:
            searches += 1
            conflict = conflict_search(
                buckets, pivot_rows, j, algebra, pivotless, debug_checks, descending_columns=descending
            )
            if conflict is None:
                pivotless.append(j)
                continue
            reduction = reduce_with_evidence(conflict, pivot_rows, algebra, pivotless)
            if algebra.lead(reduction.row) != j:
                raise InvariantError(f"new pivot for column {j} is led by a deficient column")
            bucket = buckets[conflict.frontier]
            bucket[:] = [entry for entry in bucket if entry[0] != conflict.row_id]
            pivots[j] = Pivot(j, reduction.row, conflict.row_id, reduction.reducers)
        else:
            pivotless.append(j)
            continue
        pivot_rows[j] = pivots[j].row
        descending.insert(0, j)
        logger.debug("Column %d: pivot from input row %d", j, pivots[j].source_row)

    sequence = PivotSequence(n, algebra, pivots, pivotless)
    if debug_checks:
        _check_echelon(sequence)
    logger.info(
        "Eliminated %d columns with %s rows: rank %d, corank %d, %d conflict searches in %.2fs",
        n, algebra.name, sequence.rank, sequence.corank, searches, time.perf_counter() - started,
    )
    return sequence


__all__ = ["Pivot", "PivotSequence", "forward_eliminate"]
