"""Mult-indices, words and the elimination column order."""

from .columns import (
    ColumnTable,
    build_column_table,
    column_sort_key,
    depth_order_violations,
    hoffman_order_violations,
)
from .multindex import (
    EMPTY_WORD,
    X,
    Y,
    MultIndex,
    Word,
    all_ones,
    enumerate_indices,
    hoffman_indices,
    index_code,
    index_to_word,
    iter_indices,
    word_code,
    word_to_index,
    z_letter,
)

__all__ = [
    "MultIndex",
    "Word",
    "EMPTY_WORD",
    "X",
    "Y",
    "z_letter",
    "all_ones",
    "index_to_word",
    "word_to_index",
    "word_code",
    "index_code",
    "iter_indices",
    "enumerate_indices",
    "hoffman_indices",
    "ColumnTable",
    "build_column_table",
    "column_sort_key",
    "depth_order_violations",
    "hoffman_order_violations",
]
