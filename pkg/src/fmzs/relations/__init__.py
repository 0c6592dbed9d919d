"""Relation pair families and binary system generation."""

from .families import Pair, PairFamily, count_pairs, emids, enumerate_pairs, mids, pair_sort_key
from .generator import Relation, eds_relation, generate_system, split_blocks

__all__ = [
    "Pair",
    "PairFamily",
    "mids",
    "emids",
    "pair_sort_key",
    "enumerate_pairs",
    "count_pairs",
    "Relation",
    "eds_relation",
    "split_blocks",
    "generate_system",
]
