"""Sparse GF(2) linear forms over column ids."""

from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple


@dataclass(frozen=True)
class Gf2Combination:
    """A GF(2) linear form given by its support.

    Attributes:
        support: Strictly increasing 1-based column ids
    """

    support: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        support = tuple(self.support)
        if any(b <= a for a, b in zip(support, support[1:])):
            raise ValueError(f"support must be strictly increasing, got {support}")
        if support and support[0] < 1:
            raise ValueError(f"column ids are 1-based, got {support[0]}")
        object.__setattr__(self, "support", support)

    @classmethod
    def from_ids(cls, ids: Iterable[int]) -> "Gf2Combination":
        """Build from any iterable of distinct ids."""
        return cls(tuple(sorted(set(ids))))

    @classmethod
    def from_bits(cls, bits: int) -> "Gf2Combination":
        """Inverse of ``to_bits``: bit ``i - 1`` set means column ``i``."""
        support = []
        while bits:
            low = bits & -bits
            support.append(low.bit_length())
            bits ^= low
        return cls(tuple(support))

    def to_bits(self) -> int:
        bits = 0
        for column in self.support:
            bits |= 1 << (column - 1)
        return bits

    @property
    def lead(self) -> int:
        """Smallest column id, or 0 for the zero form."""
        return self.support[0] if self.support else 0

    @property
    def is_zero(self) -> bool:
        return not self.support

    def __xor__(self, other: "Gf2Combination") -> "Gf2Combination":
        return Gf2Combination(tuple(sorted(set(self.support).symmetric_difference(other.support))))

    def __len__(self) -> int:
        return len(self.support)

    def __iter__(self) -> Iterator[int]:
        return iter(self.support)

    def __contains__(self, column: object) -> bool:
        return column in self.support

    def __str__(self) -> str:
        return " ".join(str(column) for column in self.support)


__all__ = ["Gf2Combination"]
