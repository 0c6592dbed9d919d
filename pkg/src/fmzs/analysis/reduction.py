"""Reduced forms over the Hoffman indices and relation-basis extraction."""

import logging
from typing import List, Tuple

from ..elimination import PivotSequence
from ..errors import IndexDomainError, InvariantError
from ..indices import ColumnTable, MultIndex
from ..systems import Gf2Combination, LinearSystem, Pair

logger = logging.getLogger(__name__)


def _hoffman_mask(columns: ColumnTable) -> int:
    mask = 0
    for column in columns.hoffman_columns():
        mask |= 1 << (column - 1)
    return mask


def reduced_form(index: MultIndex, pivots: PivotSequence, columns: ColumnTable) -> Gf2Combination:
    """Express the symbol of ``index`` through Hoffman indices.

    The smallest non-Hoffman column in the support is cleared with its pivot
    until only Hoffman columns remain. Pivots only reach to the right, so the
    loop ends after at most one step per column.

    Args:
        index: Admissible index of the system's weight
        pivots: Elimination of the EDS system of that weight
        columns: Its column table

    Returns:
        Combination over Hoffman columns

    Raises:
        IndexDomainError: If the index is not admissible or has another weight
        InvariantError: If a non-Hoffman column has no pivot
    """
    if not index.is_admissible or index.weight != columns.weight:
        raise IndexDomainError(f"({index}) is not an admissible index of weight {columns.weight}")
    hoffman = _hoffman_mask(columns)
    bits = 1 << (columns.column_id(index) - 1)
    while True:
        rest = bits & ~hoffman
        if not rest:
            break
        column = (rest & -rest).bit_length()
        if not pivots.has_pivot(column):
            raise InvariantError(f"non-Hoffman column {column} ({columns.index(column)}) has no pivot")
        bits ^= pivots.bits(column)
    return Gf2Combination.from_bits(bits)


def graded_reduced_form(index: MultIndex, pivots: PivotSequence, columns: ColumnTable) -> Tuple[MultIndex, ...]:
    """Depth-graded class of ``index``: the same-depth part of its reduced form."""
    full = reduced_form(index, pivots, columns)
    return tuple(
        sorted(columns.index(c) for c in full.support if columns.index(c).depth == index.depth)
    )


def extract_relation_rows(pivots: PivotSequence) -> List[int]:
    """Input row ids consumed by the pivots, in pivot-column order."""
    return list(pivots.consumed_rows().values())


def extract_relation_basis(system: LinearSystem, pivots: PivotSequence) -> List[Pair]:
    """Generating pairs of the relations that form a basis of the relation space.

    Returns:
        One pair per pivot, in pivot-column order

    Raises:
        ValueError: If the system carries no provenance (parsed from a file)
    """
    pairs = []
    for row_id in extract_relation_rows(pivots):
        provenance = system.rows[row_id - 1].provenance
        if provenance is None:
            raise ValueError("system has no provenance; use extract_relation_rows instead")
        pairs.append(provenance)
    logger.debug("Extracted %d basis relations at weight %d", len(pairs), system.weight)
    return pairs


__all__ = ["reduced_form", "graded_reduced_form", "extract_relation_rows", "extract_relation_basis"]
