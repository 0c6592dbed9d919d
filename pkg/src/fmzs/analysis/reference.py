"""Published reference values used as expected data by reports and tests."""

from typing import Dict, List, Tuple

from ..indices import MultIndex

# dim of the formal space, weights 0 .. 22
D_K: Tuple[int, ...] = (1, 0, 1, 1, 1, 2, 2, 3, 4, 5, 7, 9, 12, 16, 21, 28, 37, 49, 65, 86, 114, 151, 200)

# the sub-family dimensions agree with d_k below weight 7
KNT_DIMS: Dict[int, int] = dict(
    zip(range(7, 21), (4, 6, 8, 12, 21, 30, 44, 66, 100, 140, 208, 300, 441, 644))
)
MJPO_DIMS: Dict[int, int] = dict(
    zip(range(7, 23), (4, 4, 6, 8, 10, 14, 18, 24, 33, 42, 57, 75, 99, 132, 174, 231))
)

MJPO_EXCEPTIONS = frozenset({7, 15})


def _pairs(*pairs: Tuple[Tuple[int, ...], Tuple[int, ...]]) -> List[Tuple[MultIndex, MultIndex]]:
    return [(MultIndex(left), MultIndex(right)) for left, right in pairs]


# one relation basis per weight, as pairs of the generating relations
PUBLISHED_BASES: Dict[int, List[Tuple[MultIndex, MultIndex]]] = {
    3: _pairs(((1,), (2,))),
    4: _pairs(((1,), (2, 1)), ((1,), (3,)), ((2,), (2,))),
    5: _pairs(
        ((1,), (2, 1, 1)), ((1,), (2, 2)), ((1,), (3, 1)), ((1,), (4,)), ((2,), (2, 1)), ((2,), (3,)),
    ),
    6: _pairs(
        ((1,), (2, 1, 1, 1)), ((1,), (2, 1, 2)), ((1,), (2, 2, 1)), ((1,), (2, 3)),
        ((1,), (3, 1, 1)), ((1,), (3, 2)), ((1,), (4, 1)), ((1,), (5,)),
        ((2,), (2, 1, 1)), ((2,), (2, 2)), ((2,), (3, 1)), ((2, 1), (2, 1)),
        ((2, 1), (3,)), ((3,), (3,)),
    ),
}

# depth-graded classes: index -> Hoffman indices of the same depth summing to it
PUBLISHED_REDUCED_FORMS: Dict[Tuple[int, ...], Tuple[Tuple[int, ...], ...]] = {
    (3, 1): ((2, 2),),
    (4, 1): ((2, 3), (3, 2)),
    (2, 1, 3): ((2, 2, 2),),
    (3, 2, 1): ((2, 2, 2),),
    (4, 1, 1): ((2, 2, 2),),
    (5, 1): ((3, 3),),
    (5, 1, 1): ((2, 2, 3), (2, 3, 2), (3, 2, 2)),
    (3, 1, 3): ((2, 2, 3), (2, 3, 2), (3, 2, 2)),
    (3, 3, 1): ((2, 3, 2),),
    (4, 2, 1): ((2, 2, 3), (2, 3, 2)),
    (4, 1, 2): ((2, 2, 3), (3, 2, 2)),
    (2, 1, 4): ((2, 2, 3), (3, 2, 2)),
    (2, 4, 1): ((2, 3, 2), (3, 2, 2)),
}


def published_dimension(family: str, k: int) -> int:
    """Published dimension of a family at weight ``k``.

    Raises:
        KeyError: If no published value exists
    """
    family = family.lower()
    if 0 <= k < len(D_K) and (family == "eds" or (family in ("knt", "mjpo") and k < 7)):
        return D_K[k]
    if family == "knt":
        return KNT_DIMS[k]
    if family == "mjpo":
        return MJPO_DIMS[k]
    raise KeyError(f"no published value for {family} at weight {k}")


__all__ = [
    "D_K",
    "KNT_DIMS",
    "MJPO_DIMS",
    "MJPO_EXCEPTIONS",
    "PUBLISHED_BASES",
    "PUBLISHED_REDUCED_FORMS",
    "published_dimension",
]
