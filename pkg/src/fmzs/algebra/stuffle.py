"""Stuffle (harmonic) product of z-words.

    z_i u * z_j v = z_i (u * z_j v) + z_j (z_i u * v) + z_{i+j} (u * v)

with the empty index as unit. Both versions work on index tuples and convert
to words at the end.
"""

from functools import lru_cache
from typing import Dict, FrozenSet, Tuple

from ..indices import MultIndex, index_to_word
from .polynomial import Gf2WordSet, IntWordPoly

Parts = Tuple[int, ...]


@lru_cache(maxsize=65536)
def _stuffle_int(a: Parts, b: Parts) -> Tuple[Tuple[Parts, int], ...]:
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    terms: Dict[Parts, int] = {}
    for head, left, right in ((a[0], a[1:], b), (b[0], a, b[1:]), (a[0] + b[0], a[1:], b[1:])):
        for tail, coefficient in _stuffle_int(left, right):
            key = (head,) + tail
            terms[key] = terms.get(key, 0) + coefficient
    return tuple(terms.items())


@lru_cache(maxsize=65536)
def _stuffle_gf2(a: Parts, b: Parts) -> FrozenSet[Parts]:
    if not a:
        return frozenset((b,))
    if not b:
        return frozenset((a,))
    acc: set = set()
    for head, left, right in ((a[0], a[1:], b), (b[0], a, b[1:]), (a[0] + b[0], a[1:], b[1:])):
        acc ^= {(head,) + tail for tail in _stuffle_gf2(left, right)}
    return frozenset(acc)


def stuffle_int(left: MultIndex, right: MultIndex) -> IntWordPoly:
    """Integer stuffle of z_K and z_L as a combination of z-form words.

    Example:
        z_1 * z_2 = z_1 z_2 + z_2 z_1 + z_3
    """
    return IntWordPoly(
        {index_to_word(MultIndex(parts)): c for parts, c in _stuffle_int(left.parts, right.parts)}
    )


def stuffle_gf2(left: MultIndex, right: MultIndex) -> Gf2WordSet:
    """Support of (z_K * z_L) mod 2."""
    return frozenset(index_to_word(MultIndex(parts)) for parts in _stuffle_gf2(left.parts, right.parts))


__all__ = ["stuffle_int", "stuffle_gf2"]
