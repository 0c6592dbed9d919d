"""Shuffle product of words, over the integers and over GF(2).

The integer product follows the letter recursion

    au ш bv = a(u ш bv) + b(au ш v)

and serves as the small-degree oracle. The GF(2) product splits every result
word at position ``l``: the first ``l`` letters are a shuffle of a prefix of
``u`` with a prefix of ``v`` whose lengths add up to ``l``, the rest is a
shuffle of the matching suffixes. With ``l`` about half the total degree the
halves are small enough to memoize.
"""

import logging
import threading
from functools import lru_cache
from typing import Dict, Optional, Tuple

from ..indices import EMPTY_WORD, Word
from .polynomial import Gf2WordSet, IntWordPoly

logger = logging.getLogger(__name__)

MemoKey = Tuple[int, int, int, int]


@lru_cache(maxsize=65536)
def shuffle_int(u: Word, v: Word) -> IntWordPoly:
    """Integer shuffle of two words.

    Example:
        y ш xy = yxy + 2 xyy
    """
    if u.degree == 0:
        return IntWordPoly.monomial(v)
    if v.degree == 0:
        return IntWordPoly.monomial(u)
    a = Word(u.first, 1)
    b = Word(v.first, 1)
    return shuffle_int(u.rest, v).left_multiply(a) + shuffle_int(u, v.rest).left_multiply(b)


def _prefix(word: Word, length: int) -> Word:
    return Word(word.bits >> (word.degree - length), length)


def _suffix(word: Word, start: int) -> Word:
    length = word.degree - start
    return Word(word.bits & ((1 << length) - 1), length)


class ShuffleMemo:
    """Cache of GF(2) shuffles for operand pairs up to a total degree.

    Keys are the (degree, word code) pairs of both operands with the operands
    in a canonical order, since the product commutes. Lookups take no lock;
    inserts are serialized. Entries are never evicted.
    """

    def __init__(self, max_degree: int):
        if max_degree < 0:
            raise ValueError(f"max_degree must be non-negative, got {max_degree}")
        self.max_degree = max_degree
        self._table: Dict[MemoKey, Gf2WordSet] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    @staticmethod
    def key(u: Word, v: Word) -> MemoKey:
        a = (u.degree, u.bits + 1)
        b = (v.degree, v.bits + 1)
        return a + b if a <= b else b + a

    def __len__(self) -> int:
        return len(self._table)

    def get(self, u: Word, v: Word) -> Optional[Gf2WordSet]:
        if u.degree + v.degree > self.max_degree:
            return None
        with self._lock:
            found = self._table.get(self.key(u, v))
            if found is None:
                self.misses += 1
            else:
                self.hits += 1
        return found

    def put(self, u: Word, v: Word, result: Gf2WordSet) -> None:
        if u.degree + v.degree > self.max_degree:
            return
        with self._lock:
            self._table.setdefault(self.key(u, v), result)

    def clear(self) -> None:
        with self._lock:
            self._table.clear()
            self.hits = 0
            self.misses = 0


_default_memo = ShuffleMemo(max_degree=8)


def default_memo() -> ShuffleMemo:
    return _default_memo


def split_shuffle_gf2(u: Word, v: Word, split: int, memo: Optional[ShuffleMemo] = None) -> Gf2WordSet:
    """GF(2) shuffle of ``u`` and ``v`` assembled around one split position.

    Args:
        u: Left operand
        v: Right operand
        split: Length of the prefix part, 0 < split <= deg u + deg v
        memo: Cache used for the half-size products

    Returns:
        Support of (u ш v) mod 2
    """
    total = u.degree + v.degree
    if not 0 < split <= total:
        raise ValueError(f"split position must lie in (0, {total}], got {split}")
    acc: set = set()
    for i in range(max(0, split - v.degree), min(u.degree, split) + 1):
        j = split - i
        heads = shuffle_gf2(_prefix(u, i), _prefix(v, j), memo)
        if not heads:
            continue
        tails = shuffle_gf2(_suffix(u, i), _suffix(v, j), memo)
        # fixed head length makes every concatenation distinct within one split
        acc ^= {head + tail for head in heads for tail in tails}
    return frozenset(acc)


def shuffle_gf2(u: Word, v: Word, memo: Optional[ShuffleMemo] = None) -> Gf2WordSet:
    """Support of (u ш v) mod 2, split at half the total degree.

    Args:
        u: Left operand
        v: Right operand
        memo: Shuffle cache; the module default is used when omitted

    Returns:
        Frozen set of words of degree deg u + deg v

    Example:
        xy ш xy = 2 xyxy + 4 xxyy, so the binary product is empty
    """
    if u.degree == 0:
        return frozenset((v,))
    if v.degree == 0:
        return frozenset((u,))
    if memo is None:
        memo = _default_memo
    cached = memo.get(u, v)
    if cached is not None:
        return cached
    result = split_shuffle_gf2(u, v, (u.degree + v.degree) // 2, memo)
    memo.put(u, v, result)
    return result


def y_power(n: int) -> Word:
    """The word y^n."""
    return Word((1 << n) - 1, n) if n > 0 else EMPTY_WORD


__all__ = [
    "ShuffleMemo",
    "default_memo",
    "shuffle_int",
    "shuffle_gf2",
    "split_shuffle_gf2",
    "y_power",
]
