"""Dense GF(2) elimination on packed bit rows, used to cross-check the engine."""

import logging
from typing import FrozenSet, Optional, Sequence, Tuple, Union

import numpy as np

from ..config import RunConfig, get_run_config
from ..errors import SizeGuardError
from ..systems import LinearSystem

logger = logging.getLogger(__name__)


def pack_rows(supports: Sequence[Sequence[int]], n: int) -> np.ndarray:
    """Pack 1-based supports into a ``uint8`` matrix, column 1 in the top bit of byte 0."""
    dense = np.zeros((len(supports), max(n, 1)), dtype=np.uint8)
    for r, support in enumerate(supports):
        if support:
            dense[r, np.asarray(support, dtype=np.int64) - 1] = 1
    return np.packbits(dense, axis=1)


def dense_eliminate_oracle(
    system: Union[LinearSystem, Sequence[Sequence[int]]],
    n: Optional[int] = None,
    max_columns: Optional[int] = None,
    config: Optional[RunConfig] = None,
) -> Tuple[int, FrozenSet[int]]:
    """Textbook GF(2) row reduction, pivoting left to right.

    Args:
        system: A LinearSystem, or raw supports (then ``n`` is required)
        n: Column count for raw supports
        max_columns: Size guard; config ``oracle_max_columns`` by default
        config: Run configuration; the global one when omitted

    Returns:
        ``(rank, pivot columns)`` with 1-based columns

    Raises:
        SizeGuardError: If the column count exceeds the guard
    """
    if isinstance(system, LinearSystem):
        n = system.column_count
        supports = [row.combination.support for row in system.rows]
    else:
        if n is None:
            raise ValueError("n is required for raw supports")
        supports = [tuple(s) for s in system]
    if max_columns is None:
        max_columns = (config or get_run_config()).oracle_max_columns
    if n > max_columns:
        raise SizeGuardError(f"dense oracle limited to {max_columns} columns, system has {n}")

    matrix = pack_rows(supports, n)
    rank = 0
    pivots = []
    for column in range(n):
        if rank == matrix.shape[0]:
            break
        byte, mask = column >> 3, np.uint8(0x80 >> (column & 7))
        hits = np.nonzero(matrix[rank:, byte] & mask)[0]
        if hits.size == 0:
            continue
        chosen = rank + int(hits[0])
        if chosen != rank:
            matrix[[rank, chosen]] = matrix[[chosen, rank]]
        below = rank + 1 + np.nonzero(matrix[rank + 1:, byte] & mask)[0]
        if below.size:
            matrix[below] ^= matrix[rank]
        pivots.append(column + 1)
        rank += 1
    logger.debug("Dense oracle: %d rows, %d columns, rank %d", len(supports), n, rank)
    return rank, frozenset(pivots)


__all__ = ["pack_rows", "dense_eliminate_oracle"]
