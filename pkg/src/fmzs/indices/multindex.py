"""Mult-indices, words over {x, y} and the conversions between them.

A word is stored as a length-tagged bit vector with the first letter in the
most significant position (x = 0, y = 1). The z-letter z_k = x^(k-1) y, so a
word decomposes into z-letters exactly when it is empty or ends in y.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterator, List, Optional, Tuple

from ..errors import IndexDomainError, NotZFormError


@dataclass(frozen=True, order=True)
class MultIndex:
    """A composition (k_1, ..., k_r) of its weight.

    Attributes:
        parts: The positive integer parts, in order
    """

    parts: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.parts, tuple):
            object.__setattr__(self, "parts", tuple(self.parts))
        for part in self.parts:
            if isinstance(part, bool) or not isinstance(part, int) or part < 1:
                raise IndexDomainError(f"mult-index parts must be positive integers, got {self.parts!r}")

    @classmethod
    def of(cls, *parts: int) -> "MultIndex":
        """Shorthand constructor: ``MultIndex.of(3, 1)``."""
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "MultIndex":
        """Parse ``"3,1"`` (or ``"(3,1)"``) into a mult-index.

        Raises:
            IndexDomainError: If a part is not a positive integer
        """
        body = text.strip().strip("()").strip()
        if not body:
            return cls(())
        try:
            parts = tuple(int(token) for token in body.split(","))
        except ValueError:
            raise IndexDomainError(f"cannot parse mult-index {text!r}") from None
        return cls(parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def depth(self) -> int:
        return len(self.parts)

    @property
    def is_admissible(self) -> bool:
        """True for the empty index or when k_1 >= 2."""
        return not self.parts or self.parts[0] >= 2

    @property
    def is_hoffman(self) -> bool:
        """True when every part is 2 or 3."""
        return all(part in (2, 3) for part in self.parts)

    @property
    def is_all_ones(self) -> bool:
        return bool(self.parts) and all(part == 1 for part in self.parts)

    def __str__(self) -> str:
        return ",".join(str(part) for part in self.parts)


@dataclass(frozen=True)
class Word:
    """A word over {x, y}.

    Attributes:
        bits: Letters as an integer, first letter most significant, y = 1
        degree: Number of letters
    """

    bits: int
    degree: int

    @classmethod
    def from_str(cls, letters: str) -> "Word":
        bits = 0
        for letter in letters:
            if letter not in "xy":
                raise ValueError(f"words use the letters x and y only, got {letters!r}")
            bits = (bits << 1) | (letter == "y")
        return cls(bits, len(letters))

    @classmethod
    def empty(cls) -> "Word":
        return EMPTY_WORD

    def __str__(self) -> str:
        return "".join("y" if (self.bits >> shift) & 1 else "x" for shift in range(self.degree - 1, -1, -1))

    @property
    def first(self) -> int:
        """First letter (0 for x, 1 for y). Undefined on the empty word."""
        return (self.bits >> (self.degree - 1)) & 1

    @property
    def rest(self) -> "Word":
        """The word without its first letter."""
        return Word(self.bits & ((1 << (self.degree - 1)) - 1), self.degree - 1)

    @property
    def ends_in_y(self) -> bool:
        return self.degree > 0 and bool(self.bits & 1)

    @property
    def is_z_form(self) -> bool:
        return self.degree == 0 or self.ends_in_y

    @property
    def is_admissible(self) -> bool:
        """Empty, or starts with x and ends with y."""
        return self.degree == 0 or (self.first == 0 and self.ends_in_y)

    def prepend(self, letter: int) -> "Word":
        return Word(self.bits | (letter << self.degree), self.degree + 1)

    def __add__(self, other: "Word") -> "Word":
        return Word((self.bits << other.degree) | other.bits, self.degree + other.degree)

    def leading_ys(self) -> int:
        """Number of leading y letters."""
        count = 0
        shift = self.degree - 1
        while shift >= 0 and (self.bits >> shift) & 1:
            count += 1
            shift -= 1
        return count


EMPTY_WORD = Word(0, 0)
X = Word(0, 1)
Y = Word(1, 1)


def z_letter(k: int) -> Word:
    """z_k = x^(k-1) y."""
    if k < 1:
        raise IndexDomainError(f"z-letters are indexed by positive integers, got {k}")
    return Word(1, k)


def index_to_word(index: MultIndex) -> Word:
    """Concatenate z_{k_1} ... z_{k_r}; the empty index maps to the empty word."""
    bits = 0
    degree = 0
    for part in index.parts:
        bits = (bits << part) | 1
        degree += part
    return Word(bits, degree)


def word_to_index(word: Word) -> MultIndex:
    """Decompose a z-form word into z-letters.

    Raises:
        NotZFormError: If the word ends in x
    """
    if not word.is_z_form:
        raise NotZFormError(f"word {word} ends in x and has no mult-index")
    parts: List[int] = []
    run = 0
    for shift in range(word.degree - 1, -1, -1):
        run += 1
        if (word.bits >> shift) & 1:
            parts.append(run)
            run = 0
    return MultIndex(tuple(parts))


def word_code(word: Word) -> int:
    """Stable code of any word: 1 + value of the letters read as binary, y = 1."""
    return word.bits + 1


def index_code(index: MultIndex) -> int:
    return word_code(index_to_word(index))


def all_ones(depth: int) -> MultIndex:
    return MultIndex((1,) * depth)


def _check_weight(k: int) -> None:
    if k < 0:
        raise ValueError(f"weight must be non-negative, got {k}")


def iter_indices(k: int, admissible_only: bool = False) -> Iterator[MultIndex]:
    """Yield compositions of ``k`` in increasing word-code order."""
    _check_weight(k)
    if k == 0:
        yield MultIndex(())
        return
    # z-form words of degree k are the odd bit patterns; admissible ones start with x
    upper = 1 << (k - 1) if admissible_only else 1 << k
    for bits in range(1, upper, 2):
        yield word_to_index(Word(bits, k))


def enumerate_indices(k: int, admissible_only: bool = False) -> List[MultIndex]:
    """All compositions of ``k``, or only the admissible ones.

    Args:
        k: Weight, k >= 0
        admissible_only: Keep only indices with k_1 >= 2

    Returns:
        2^(k-1) compositions (2^(k-2) admissible ones for k >= 2), ordered by
        word code. ``k = 0`` gives the empty index.
    """
    return list(iter_indices(k, admissible_only))


@lru_cache(maxsize=None)
def _hoffman(k: int) -> Tuple[Tuple[int, ...], ...]:
    if k == 0:
        return ((),)
    found: List[Tuple[int, ...]] = []
    for head in (2, 3):
        if k >= head:
            found.extend((head,) + tail for tail in _hoffman(k - head))
    return tuple(found)


def hoffman_indices(k: int, r: Optional[int] = None) -> FrozenSet[MultIndex]:
    """Indices of weight ``k`` whose parts are all 2 or 3.

    Args:
        k: Weight
        r: Restrict to this depth when given

    Returns:
        Frozen set of Hoffman indices; with depth ``r`` it has binom(r, k-2r)
        members
    """
    _check_weight(k)
    return frozenset(
        MultIndex(parts) for parts in _hoffman(k) if r is None or len(parts) == r
    )


__all__ = [
    "MultIndex",
    "Word",
    "EMPTY_WORD",
    "X",
    "Y",
    "z_letter",
    "index_to_word",
    "word_to_index",
    "word_code",
    "index_code",
    "all_ones",
    "iter_indices",
    "enumerate_indices",
    "hoffman_indices",
]
