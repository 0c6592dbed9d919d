"""Families of index pairs that generate binary double-shuffle relations.

For a weight k the pairs (K, L) have wt(K) + wt(L) = k with L admissible:

* ``EDS``: K admissible or all ones, any split
* ``FDS``: K admissible
* ``MJPO``: the FDS pairs plus K = (1)
* ``KNT``: K in {(3), (2,1)}, K = (2), or K = (1)
"""

from enum import Enum
from typing import Iterator, List, Tuple, Union

from ..indices import MultIndex, all_ones, enumerate_indices, index_code

Pair = Tuple[MultIndex, MultIndex]


class PairFamily(Enum):
    """Pair families, from the full extended set down to the smallest one."""

    EDS = "eds"
    FDS = "fds"
    MJPO = "mjpo"
    KNT = "knt"

    @classmethod
    def parse(cls, value: Union["PairFamily", str]) -> "PairFamily":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            valid = ", ".join(member.value for member in cls)
            raise ValueError(f"unknown pair family {value!r}; expected one of {valid}") from None


def mids(weight: int) -> List[MultIndex]:
    """Non-empty admissible indices of a weight."""
    if weight < 2:
        return []
    return enumerate_indices(weight, admissible_only=True)


def emids(weight: int) -> List[MultIndex]:
    """Admissible indices of a weight plus the all-ones index."""
    if weight < 1:
        return []
    return mids(weight) + [all_ones(weight)]


def pair_sort_key(pair: Pair) -> Tuple[int, int, int]:
    left, right = pair
    return (left.weight, index_code(left), index_code(right))


def _raw_pairs(family: PairFamily, k: int) -> Iterator[Pair]:
    if family is PairFamily.EDS:
        for i in range(1, k - 1):
            for left in emids(i):
                for right in mids(k - i):
                    yield left, right
    elif family is PairFamily.FDS:
        for i in range(2, k - 1):
            for left in mids(i):
                for right in mids(k - i):
                    yield left, right
    elif family is PairFamily.MJPO:
        yield from _raw_pairs(PairFamily.FDS, k)
        for right in mids(k - 1):
            yield MultIndex.of(1), right
    else:
        for left in (MultIndex.of(3), MultIndex.of(2, 1)):
            for right in mids(k - 3):
                yield left, right
        for right in mids(k - 2):
            yield MultIndex.of(2), right
        for right in mids(k - 1):
            yield MultIndex.of(1), right


def enumerate_pairs(family: Union[PairFamily, str], k: int) -> List[Pair]:
    """All pairs of a family at weight ``k``, each once.

    Args:
        family: Pair family
        k: Weight, k >= 2

    Returns:
        Pairs ordered by (wt(K), code(K), code(L))
    """
    if k < 2:
        raise ValueError(f"pair families need weight >= 2, got {k}")
    family = PairFamily.parse(family)
    return sorted(_raw_pairs(family, k), key=pair_sort_key)


def count_pairs(family: Union[PairFamily, str], k: int) -> int:
    """Number of pairs ``enumerate_pairs`` would return, without listing them."""
    family = PairFamily.parse(family)

    def m(w: int) -> int:
        return 1 << (w - 2) if w >= 2 else 0

    def e(w: int) -> int:
        return m(w) + 1 if w >= 1 else 0

    if family is PairFamily.EDS:
        return sum(e(i) * m(k - i) for i in range(1, k - 1))
    fds = sum(m(i) * m(k - i) for i in range(2, k - 1))
    if family is PairFamily.FDS:
        return fds
    if family is PairFamily.MJPO:
        return fds + m(k - 1)
    return 2 * m(k - 3) + m(k - 2) + m(k - 1)


__all__ = ["Pair", "PairFamily", "mids", "emids", "pair_sort_key", "enumerate_pairs", "count_pairs"]
