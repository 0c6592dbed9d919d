"""Shuffle regularization over GF(2).

A z-form word is y^n z_N with N admissible or empty. Its regularization is
(-1)^n x (y^n ш z_N') where z_N = x z_N'. Modulo 2 the sign disappears, so

    reg(yxy)  = x (y ш y)  = 0
    reg(yxxy) = x (y ш xy) = xyxy
    reg(yyxy) = x (yy ш y) = xyyy
"""

import logging
from enum import Enum
from typing import FrozenSet, Optional, Union

from ..errors import NotZFormError
from ..indices import MultIndex, Word, index_to_word, word_to_index
from .polynomial import Gf2WordSet
from .shuffle import ShuffleMemo, shuffle_gf2, y_power
from .stuffle import stuffle_gf2

logger = logging.getLogger(__name__)


class ProductKind(Enum):
    """Which product a regularized relation side is built from."""

    SHUFFLE = "shuffle"
    STUFFLE = "stuffle"


def regularize_word_gf2(word: Word, memo: Optional[ShuffleMemo] = None) -> Gf2WordSet:
    """Regularize one z-form word modulo 2.

    Args:
        word: Empty or ending in y
        memo: Shuffle cache for the y^n ш z_N' product

    Returns:
        Set of admissible words of the same degree

    Raises:
        NotZFormError: If the word ends in x
    """
    if not word.is_z_form:
        raise NotZFormError(f"cannot regularize {word}: it ends in x")
    n = word.leading_ys()
    if n == 0:
        return frozenset((word,))
    rest_degree = word.degree - n
    if rest_degree == 0:
        return frozenset()
    # the remainder starts with x; drop it to get z_N'
    tail = Word(word.bits & ((1 << (rest_degree - 1)) - 1), rest_degree - 1)
    return frozenset(w.prepend(0) for w in shuffle_gf2(y_power(n), tail, memo))


def regularized_symbol(index: MultIndex, memo: Optional[ShuffleMemo] = None) -> FrozenSet[MultIndex]:
    """Admissible indices whose sum is the regularized binary symbol of ``index``.

    Example:
        (1,3) regularizes to (2,2); (1,2) regularizes to zero
    """
    return frozenset(word_to_index(w) for w in regularize_word_gf2(index_to_word(index), memo))


def reg_product_gf2(
    kind: Union[ProductKind, str],
    left: MultIndex,
    right: MultIndex,
    memo: Optional[ShuffleMemo] = None,
) -> Gf2WordSet:
    """Regularized shuffle or stuffle of z_K and z_L modulo 2.

    Args:
        kind: ``ProductKind`` or its value ``"shuffle"`` / ``"stuffle"``
        left: First index, admissible or all ones
        right: Second index, admissible
        memo: Shuffle cache

    Returns:
        Set of admissible words of weight wt(K) + wt(L)
    """
    kind = ProductKind(kind)
    if kind is ProductKind.SHUFFLE:
        product = shuffle_gf2(index_to_word(left), index_to_word(right), memo)
    else:
        product = stuffle_gf2(left, right)
    acc: set = set()
    for word in product:
        if word.is_admissible:
            acc ^= {word}
        else:
            acc ^= regularize_word_gf2(word, memo)
    return frozenset(acc)


__all__ = ["ProductKind", "regularize_word_gf2", "regularized_symbol", "reg_product_gf2"]
