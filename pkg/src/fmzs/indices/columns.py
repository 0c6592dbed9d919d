"""Elimination column order over the admissible indices of one weight.

Columns are grouped into depth blocks, deeper blocks first. Inside a block the
non-Hoffman indices come before the Hoffman ones, and each of the two
subblocks is sorted lexicographically on parts, descending. Column ids are the
1-based positions in this order.

    >>> [str(K) for K in build_column_table(4).order]
    ['2,1,1', '3,1', '2,2', '4']
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Tuple

from ..errors import IndexDomainError
from .multindex import MultIndex, iter_indices

logger = logging.getLogger(__name__)


def column_sort_key(index: MultIndex) -> Tuple[int, bool, Tuple[int, ...]]:
    return (-index.depth, index.is_hoffman, tuple(-part for part in index.parts))


@dataclass(frozen=True)
class ColumnTable:
    """Bijection between admissible indices of weight ``k`` and column ids.

    Attributes:
        weight: The weight k
        order: Indices in column order; ``order[i - 1]`` has column id ``i``
    """

    weight: int
    order: Tuple[MultIndex, ...]
    _positions: Dict[MultIndex, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_positions", {index: pos for pos, index in enumerate(self.order, start=1)})

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self) -> Iterator[MultIndex]:
        return iter(self.order)

    def __contains__(self, index: object) -> bool:
        return index in self._positions

    @property
    def column_count(self) -> int:
        return len(self.order)

    def column_id(self, index: MultIndex) -> int:
        """Column id of an admissible index of this weight.

        Raises:
            IndexDomainError: If the index is not a column of this table
        """
        try:
            return self._positions[index]
        except KeyError:
            raise IndexDomainError(
                f"({index}) is not an admissible index of weight {self.weight}"
            ) from None

    def index(self, column: int) -> MultIndex:
        """Index at a 1-based column id."""
        if not 1 <= column <= len(self.order):
            raise IndexDomainError(f"column {column} outside [1, {len(self.order)}]")
        return self.order[column - 1]

    def depth_blocks(self) -> Dict[int, range]:
        """Column-id range of every depth block, keyed by depth."""
        blocks: Dict[int, range] = {}
        start = 1
        for pos, index in enumerate(self.order, start=1):
            nxt = self.order[pos] if pos < len(self.order) else None
            if nxt is None or nxt.depth != index.depth:
                blocks[index.depth] = range(start, pos + 1)
                start = pos + 1
        return blocks

    def hoffman_columns(self) -> List[int]:
        return [pos for pos, index in enumerate(self.order, start=1) if index.is_hoffman]

    def dumps(self) -> str:
        """Audit dump: ``# weight k`` then ``<id> <k_1>,<k_2>,...`` per column."""
        lines = [f"# weight {self.weight}"]
        lines.extend(f"{pos} {index}" for pos, index in enumerate(self.order, start=1))
        return "\n".join(lines) + "\n"


def build_column_table(k: int) -> ColumnTable:
    """Build the column order for weight ``k``.

    Args:
        k: Weight, k >= 2

    Returns:
        ColumnTable whose order satisfies the depth-block and Hoffman-last conditions
    """
    if k < 2:
        raise ValueError(f"column tables need weight >= 2, got {k}")
    order = tuple(sorted(iter_indices(k, admissible_only=True), key=column_sort_key))
    logger.debug("Built column table for weight %d with %d columns", k, len(order))
    return ColumnTable(k, order)


def depth_order_violations(table: ColumnTable) -> List[Tuple[int, int]]:
    """Pairs i < j with depth(K_i) < depth(K_j).

    An empty result also means every depth block is contiguous.
    """
    order = table.order
    return [
        (i + 1, j + 1)
        for i in range(len(order))
        for j in range(i + 1, len(order))
        if order[i].depth < order[j].depth
    ]


def hoffman_order_violations(table: ColumnTable) -> List[Tuple[int, int]]:
    """Pairs i < j in one depth block where K_i is Hoffman and K_j is not."""
    order = table.order
    return [
        (i + 1, j + 1)
        for i in range(len(order))
        for j in range(i + 1, len(order))
        if order[i].depth == order[j].depth and order[i].is_hoffman and not order[j].is_hoffman
    ]


__all__ = [
    "ColumnTable",
    "build_column_table",
    "column_sort_key",
    "depth_order_violations",
    "hoffman_order_violations",
]
