"""Shuffle and stuffle products and shuffle regularization."""

from .polynomial import Gf2WordSet, IntWordPoly, format_word_set, xor_accumulate
from .regularization import ProductKind, reg_product_gf2, regularize_word_gf2, regularized_symbol
from .shuffle import ShuffleMemo, default_memo, shuffle_gf2, shuffle_int, split_shuffle_gf2, y_power
from .stuffle import stuffle_gf2, stuffle_int

__all__ = [
    "IntWordPoly",
    "Gf2WordSet",
    "xor_accumulate",
    "format_word_set",
    "ShuffleMemo",
    "default_memo",
    "shuffle_int",
    "shuffle_gf2",
    "split_shuffle_gf2",
    "y_power",
    "stuffle_int",
    "stuffle_gf2",
    "ProductKind",
    "regularize_word_gf2",
    "regularized_symbol",
    "reg_product_gf2",
]
