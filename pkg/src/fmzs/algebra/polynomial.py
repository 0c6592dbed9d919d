"""Integer and mod-2 linear combinations of words."""

from typing import Dict, FrozenSet, Iterable, Iterator, Mapping, Optional

from ..indices import Word, word_code, word_to_index

Gf2WordSet = FrozenSet[Word]


class IntWordPoly(Mapping[Word, int]):
    """Immutable map from words to non-zero integer coefficients.

    Iteration follows increasing word code so dumps are reproducible.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Word, int]] = None):
        self._terms: Dict[Word, int] = {w: c for w, c in (terms or {}).items() if c != 0}

    @classmethod
    def monomial(cls, word: Word, coefficient: int = 1) -> "IntWordPoly":
        return cls({word: coefficient})

    def __getitem__(self, word: Word) -> int:
        return self._terms[word]

    def __iter__(self) -> Iterator[Word]:
        return iter(sorted(self._terms, key=lambda w: (w.degree, word_code(w))))

    def __len__(self) -> int:
        return len(self._terms)

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*{w}" for w, c in self.items()) or "0"
        return f"IntWordPoly({body})"

    def __add__(self, other: Mapping[Word, int]) -> "IntWordPoly":
        merged = dict(self._terms)
        for word, coefficient in other.items():
            merged[word] = merged.get(word, 0) + coefficient
        return IntWordPoly(merged)

    def left_multiply(self, prefix: Word) -> "IntWordPoly":
        """prefix . self, word by word."""
        return IntWordPoly({prefix + w: c for w, c in self._terms.items()})

    def mass(self) -> int:
        """Sum of all coefficients."""
        return sum(self._terms.values())

    def mod2(self) -> Gf2WordSet:
        """Support of the reduction modulo 2."""
        return frozenset(w for w, c in self._terms.items() if c % 2)


def xor_accumulate(sets: Iterable[Iterable[Word]]) -> Gf2WordSet:
    """Sum of mod-2 combinations given by their supports."""
    acc: set = set()
    for members in sets:
        acc.symmetric_difference_update(members)
    return frozenset(acc)


def format_word_set(words: Iterable[Word]) -> str:
    """Debug dump: sorted ``k_1,...,k_r`` lists joined by `` + ``.

    Words that are not in z-form are written with their letters.
    """
    rendered = []
    for word in sorted(words, key=lambda w: (w.degree, word_code(w))):
        rendered.append(str(word_to_index(word)) if word.is_z_form else str(word))
    return " + ".join(rendered) if rendered else "0"


__all__ = ["IntWordPoly", "Gf2WordSet", "xor_accumulate", "format_word_set"]
