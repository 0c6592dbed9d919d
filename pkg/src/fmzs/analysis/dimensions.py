"""Dimension reports and the Hoffman-basis check."""

import logging
from dataclasses import dataclass, field
from math import comb
from typing import Dict, FrozenSet, Optional, Tuple

from ..config import RunConfig
from ..elimination import PivotSequence, forward_eliminate
from ..errors import InvariantError
from ..indices import MultIndex, hoffman_indices
from ..systems import LinearSystem, SystemStatistics

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DimensionReport:
    """Rank and corank of one eliminated system, split by depth.

    Attributes:
        weight: The weight k
        family: Pair-family tag
        rank: Dimension of the relation space
        corank: Dimension of the formal space, 2^(k-2) - rank
        depth_columns: Columns per depth block
        depth_dims: Columns minus pivots per depth block
        pivotless: Indices of the pivotless columns, in column order
        statistics: Size figures of the input system
    """

    weight: int
    family: str
    rank: int
    corank: int
    depth_columns: Dict[int, int]
    depth_dims: Dict[int, int]
    pivotless: Tuple[MultIndex, ...]
    statistics: Optional[SystemStatistics] = field(default=None, compare=False)

    @property
    def column_count(self) -> int:
        return self.rank + self.corank

    def depth_dim(self, r: int) -> int:
        return self.depth_dims.get(r, 0)


def dimensions(
    system: LinearSystem,
    pivots: Optional[PivotSequence] = None,
    config: Optional[RunConfig] = None,
) -> DimensionReport:
    """Rank, corank and depth-graded dimensions of a system.

    Args:
        system: Linear system
        pivots: Its elimination; computed here when omitted
        config: Run configuration for the elimination

    Returns:
        DimensionReport

    Raises:
        InvariantError: If a depth block does not hold binom(k-2, r-1)
            columns or the depth dimensions do not add up to the corank
    """
    if pivots is None:
        pivots = forward_eliminate(system, config=config)
    k = system.weight
    columns = system.columns
    depth_columns: Dict[int, int] = {}
    depth_dims: Dict[int, int] = {}
    for r, block in sorted(columns.depth_blocks().items()):
        depth_columns[r] = len(block)
        if len(block) != comb(k - 2, r - 1):
            raise InvariantError(f"depth {r} block of weight {k} has {len(block)} columns")
        depth_dims[r] = sum(1 for column in block if not pivots.has_pivot(column))
    if sum(depth_dims.values()) != pivots.corank:
        raise InvariantError("depth dimensions do not add up to the corank")

    report = DimensionReport(
        weight=k,
        family=system.family,
        rank=pivots.rank,
        corank=pivots.corank,
        depth_columns=depth_columns,
        depth_dims=depth_dims,
        pivotless=tuple(columns.index(column) for column in pivots.pivotless),
        statistics=system.statistics(),
    )
    logger.info("Weight %d %s: rank %d, dim %d", k, system.family, report.rank, report.corank)
    return report


@dataclass(frozen=True)
class HoffmanCheck:
    """Outcome of comparing pivotless columns with the Hoffman indices.

    Attributes:
        passed: True when they coincide
        unexpected_pivotless: Non-Hoffman indices without a pivot
        unexpected_pivots: Hoffman indices with a pivot
    """

    passed: bool
    unexpected_pivotless: FrozenSet[MultIndex]
    unexpected_pivots: FrozenSet[MultIndex]

    def witness(self) -> str:
        if self.passed:
            return "pivotless columns are exactly the Hoffman indices"
        parts = []
        if self.unexpected_pivotless:
            parts.append("pivotless non-Hoffman: " + ", ".join(f"({K})" for K in sorted(self.unexpected_pivotless)))
        if self.unexpected_pivots:
            parts.append("Hoffman with pivot: " + ", ".join(f"({K})" for K in sorted(self.unexpected_pivots)))
        return "; ".join(parts)


def verify_hoffman_basis(report: DimensionReport) -> HoffmanCheck:
    """Check that the pivotless columns are exactly the Hoffman indices."""
    pivotless = frozenset(report.pivotless)
    hoffman = hoffman_indices(report.weight)
    check = HoffmanCheck(
        passed=pivotless == hoffman,
        unexpected_pivotless=pivotless - hoffman,
        unexpected_pivots=hoffman - pivotless,
    )
    if not check.passed:
        logger.warning("Hoffman check failed at weight %d: %s", report.weight, check.witness())
    return check


__all__ = ["DimensionReport", "dimensions", "HoffmanCheck", "verify_hoffman_basis"]
