"""Binary linear systems: a column table plus GF(2) rows with provenance."""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from ..indices import ColumnTable, MultIndex, build_column_table
from .combination import Gf2Combination

logger = logging.getLogger(__name__)

Pair = Tuple[MultIndex, MultIndex]

# rough resident cost of one stored column id in a Python tuple, plus per-row overhead
_BYTES_PER_TERM = 36
_BYTES_PER_ROW = 120


@dataclass(frozen=True)
class Row:
    """One relation row.

    Attributes:
        combination: Support over column ids
        provenance: The pair (K, L) the relation came from; None for parsed rows
    """

    combination: Gf2Combination
    provenance: Optional[Pair] = None


@dataclass(frozen=True)
class SystemStatistics:
    """Size figures of a system.

    Attributes:
        rows: Number of non-empty rows, duplicates included
        mean_terms: Mean number of terms per non-empty row
        columns: Number of columns
    """

    rows: int
    mean_terms: float
    columns: int

    @property
    def estimated_bytes(self) -> int:
        """Estimated resident size of the rows and the elimination state."""
        return int(self.rows * (_BYTES_PER_ROW + self.mean_terms * _BYTES_PER_TERM) * 2)


@dataclass(frozen=True)
class LinearSystem:
    """A binary relation system of one weight.

    Attributes:
        weight: The weight k
        columns: Column table of weight k
        rows: Relation rows in generation order
        family: Pair-family tag such as ``"eds"``
    """

    weight: int
    columns: ColumnTable
    rows: Tuple[Row, ...] = field(default_factory=tuple)
    family: str = "unknown"

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))
        if self.columns.weight != self.weight:
            raise ValueError(
                f"column table has weight {self.columns.weight}, system has weight {self.weight}"
            )
        n = len(self.columns)
        for number, row in enumerate(self.rows, start=1):
            support = row.combination.support
            if support and support[-1] > n:
                raise ValueError(f"row {number} uses column {support[-1]} outside [1, {n}]")

    @classmethod
    def from_supports(
        cls,
        weight: int,
        supports: List[Tuple[int, ...]],
        family: str = "unknown",
    ) -> "LinearSystem":
        """Build a provenance-free system from raw id tuples."""
        rows = tuple(Row(Gf2Combination.from_ids(ids)) for ids in supports)
        return cls(weight, build_column_table(weight), rows, family)

    @property
    def column_count(self) -> int:
        return len(self.columns)

    def combinations(self) -> List[Gf2Combination]:
        return [row.combination for row in self.rows]

    def row_bitsets(self) -> List[int]:
        """Rows as Python int bitsets, bit ``i - 1`` for column ``i``."""
        return [row.combination.to_bits() for row in self.rows]

    def statistics(self) -> SystemStatistics:
        sizes = [len(row.combination) for row in self.rows if not row.combination.is_zero]
        mean = sum(sizes) / len(sizes) if sizes else 0.0
        return SystemStatistics(rows=len(sizes), mean_terms=mean, columns=self.column_count)


__all__ = ["Pair", "Row", "SystemStatistics", "LinearSystem"]
