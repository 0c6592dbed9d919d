"""Binary EDS relations and block-parallel system generation."""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Sequence, Union

from ..algebra import ProductKind, ShuffleMemo, reg_product_gf2
from ..config import RunConfig, get_run_config
from ..indices import ColumnTable, MultIndex, build_column_table, word_to_index
from ..systems import Gf2Combination, LinearSystem, Row
from .families import Pair, PairFamily, enumerate_pairs

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Relation:
    """One binary relation: the sum of ``support`` vanishes.

    Attributes:
        support: Admissible indices of one weight
        provenance: The pair (K, L) it came from
    """

    support: FrozenSet[MultIndex]
    provenance: Pair

    @property
    def is_trivial(self) -> bool:
        return not self.support

    def to_combination(self, columns: ColumnTable) -> Gf2Combination:
        return Gf2Combination.from_ids(columns.column_id(index) for index in self.support)


def eds_relation(left: MultIndex, right: MultIndex, memo: Optional[ShuffleMemo] = None) -> Relation:
    """reg(z_K * z_L) - reg(z_K ш z_L) modulo 2.

    Example:
        ((1), (2)) gives (2,1) + (3); ((2), (2)) gives (4)
    """
    stuffle_side = reg_product_gf2(ProductKind.STUFFLE, left, right, memo)
    shuffle_side = reg_product_gf2(ProductKind.SHUFFLE, left, right, memo)
    support = frozenset(word_to_index(word) for word in stuffle_side ^ shuffle_side)
    return Relation(support, (left, right))


def split_blocks(pairs: Sequence[Pair], block_count: int) -> List[Sequence[Pair]]:
    """Cut ``pairs`` into ``block_count`` contiguous, nearly equal blocks."""
    if block_count < 1:
        raise ValueError(f"block_count must be positive, got {block_count}")
    size, extra = divmod(len(pairs), block_count)
    blocks = []
    start = 0
    for b in range(block_count):
        end = start + size + (1 if b < extra else 0)
        blocks.append(pairs[start:end])
        start = end
    return blocks


def _generate_block(block: Sequence[Pair], columns: ColumnTable, memo: ShuffleMemo) -> List[Row]:
    rows = []
    for left, right in block:
        relation = eds_relation(left, right, memo)
        if relation.is_trivial:
            continue
        rows.append(Row(relation.to_combination(columns), relation.provenance))
    return rows


def generate_system(
    k: int,
    family: Union[PairFamily, str] = PairFamily.EDS,
    block_count: Optional[int] = None,
    threads: Optional[int] = None,
    config: Optional[RunConfig] = None,
    memo: Optional[ShuffleMemo] = None,
) -> LinearSystem:
    """Generate the binary relation system of a pair family.

    Pairs are cut into contiguous blocks that run on a thread pool; the
    results are merged in block order, so the system does not depend on the
    block count. Empty relations are dropped, duplicate rows are kept.

    Args:
        k: Weight, k >= 2
        family: Pair family
        block_count: Number of blocks (config ``block_count`` by default)
        threads: Worker pool size (config ``threads`` by default)
        config: Run configuration; the global one when omitted
        memo: Shuffle cache shared by all blocks; a fresh one sized by
            ``memo_max_degree`` when omitted

    Returns:
        LinearSystem with one row per non-trivial relation
    """
    family = PairFamily.parse(family)
    config = config or get_run_config()
    if threads is None:
        threads = config.threads
    if block_count is None:
        block_count = config.block_count
    if threads < 1:
        raise ValueError(f"threads must be positive, got {threads}")
    if memo is None:
        memo = ShuffleMemo(config.memo_max_degree(k))

    columns = build_column_table(k)
    pairs = enumerate_pairs(family, k)
    blocks = split_blocks(pairs, block_count)
    logger.debug(
        "Generating %s weight %d: %d pairs in %d blocks on %d threads",
        family.value, k, len(pairs), block_count, threads,
    )

    if threads == 1 or block_count == 1:
        results = [_generate_block(block, columns, memo) for block in blocks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda block: _generate_block(block, columns, memo), blocks))

    rows = tuple(row for block_rows in results for row in block_rows)
    system = LinearSystem(k, columns, rows, family.value)
    logger.info(
        "Generated %s system of weight %d: %d rows over %d columns (%d trivial pairs dropped)",
        family.value, k, len(rows), len(columns), len(pairs) - len(rows),
    )
    return system


__all__ = ["Relation", "eds_relation", "split_blocks", "generate_system"]
