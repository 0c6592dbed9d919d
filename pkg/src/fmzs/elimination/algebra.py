"""Row algebras: the row operations the elimination engine is written against.

Two instantiations exist. ``FieldRowAlgebra`` stores rows as
``FieldCombination`` objects over any ``BaseField``. ``BitsetRowAlgebra`` is
the GF(2) fast path: a row is a Python int with bit ``c - 1`` set for column
``c``, evaluation is a popcount parity.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, Optional, Sequence, Tuple, Union

from .fields import GF2, BaseField, FieldCombination, GF2Field

logger = logging.getLogger(__name__)


@dataclass
class Assignment:
    """Values of the suffix variables during a conflict search.

    Attributes:
        target: Column j whose variable is set to one
        frontier: Smallest assigned column i
        values: Non-zero values by column; every other variable is zero
        ones: Bitset of the columns with a non-zero value
    """

    target: int
    frontier: int
    values: Dict[int, Any] = field(default_factory=dict)
    ones: int = 0

    @classmethod
    def start(cls, target: int, one: Any = 1) -> "Assignment":
        return cls(target=target, frontier=target, values={target: one}, ones=1 << (target - 1))

    def assign(self, column: int, value: Any, field_: BaseField) -> None:
        if column >= self.frontier:
            raise ValueError(f"column {column} is not below the frontier {self.frontier}")
        self.frontier = column
        if not field_.is_zero(value):
            self.values[column] = value
            self.ones |= 1 << (column - 1)

    def value(self, column: int, field_: BaseField = GF2) -> Any:
        return self.values.get(column, field_.zero)

    def copy(self) -> "Assignment":
        return Assignment(self.target, self.frontier, dict(self.values), self.ones)


class RowAlgebra(ABC):
    """Row operations over ``n`` columns."""

    name: str = "rows"

    def __init__(self, n: int, field_: BaseField):
        """Initialize the algebra.

        Args:
            n: Number of columns
            field_: Coefficient field
        """
        self.n = n
        self.field = field_

    @abstractmethod
    def make_row(self, support: Iterable[int], coefficients: Optional[Sequence[Any]] = None) -> Any:
        """Build a row from column ids (coefficients default to one)."""

    @abstractmethod
    def is_zero(self, row: Any) -> bool:
        """True for the zero row."""

    @abstractmethod
    def skip_mask(self, columns: Iterable[int]) -> Any:
        """Opaque mask of columns that ``lead`` should ignore."""

    @abstractmethod
    def lead(self, row: Any, skip: Any = None) -> int:
        """Smallest column outside ``skip`` with a non-zero coefficient, n + 1 if none."""

    @abstractmethod
    def coefficient(self, row: Any, column: int) -> Any:
        """Coefficient of one column."""

    @abstractmethod
    def evaluate(self, row: Any, assignment: Assignment) -> Any:
        """Value of the linear form under an assignment."""

    @abstractmethod
    def solve_for(self, pivot: Any, column: int, assignment: Assignment) -> Any:
        """Value of ``column`` that makes ``pivot`` vanish given the assigned columns above it."""

    @abstractmethod
    def eliminate(self, row: Any, pivot: Any, column: int) -> Tuple[Any, Any]:
        """Clear ``column`` of ``row`` with ``pivot``.

        Returns:
            ``(row - f * pivot, f)`` with f = row[column] / pivot[column]
        """

    @abstractmethod
    def support(self, row: Any) -> Tuple[int, ...]:
        """Ascending columns with non-zero coefficients."""

    def to_bits(self, row: Any) -> int:
        bits = 0
        for column in self.support(row):
            bits |= 1 << (column - 1)
        return bits


class BitsetRowAlgebra(RowAlgebra):
    """GF(2) rows as Python int bitsets."""

    name = "bitset"

    def __init__(self, n: int, field_: BaseField = GF2):
        if not isinstance(field_, GF2Field):
            raise ValueError(f"bitset rows only support GF(2), got {field_.name}")
        super().__init__(n, field_)

    def make_row(self, support: Iterable[int], coefficients: Optional[Sequence[Any]] = None) -> int:
        columns = list(support)
        coefficients = coefficients or [1] * len(columns)
        bits = 0
        for column, coefficient in zip(columns, coefficients):
            if coefficient & 1:
                bits ^= 1 << (column - 1)
        return bits

    def is_zero(self, row: int) -> bool:
        return row == 0

    def skip_mask(self, columns: Iterable[int]) -> int:
        mask = 0
        for column in columns:
            mask |= 1 << (column - 1)
        return mask

    def lead(self, row: int, skip: Optional[int] = None) -> int:
        if skip:
            row &= ~skip
        if not row:
            return self.n + 1
        return (row & -row).bit_length()

    def coefficient(self, row: int, column: int) -> int:
        return (row >> (column - 1)) & 1

    def evaluate(self, row: int, assignment: Assignment) -> int:
        return (row & assignment.ones).bit_count() & 1

    def solve_for(self, pivot: int, column: int, assignment: Assignment) -> int:
        return (pivot & assignment.ones & ~(1 << (column - 1))).bit_count() & 1

    def eliminate(self, row: int, pivot: int, column: int) -> Tuple[int, int]:
        return row ^ pivot, 1

    def support(self, row: int) -> Tuple[int, ...]:
        columns = []
        while row:
            low = row & -row
            columns.append(low.bit_length())
            row ^= low
        return tuple(columns)

    def to_bits(self, row: int) -> int:
        return row


class FieldRowAlgebra(RowAlgebra):
    """Rows as ``FieldCombination`` objects over any field."""

    name = "field"

    def make_row(self, support: Iterable[int], coefficients: Optional[Sequence[Any]] = None) -> FieldCombination:
        columns = list(support)
        if coefficients is None:
            coefficients = [self.field.one] * len(columns)
        terms: Dict[int, Any] = {}
        for column, coefficient in zip(columns, coefficients):
            terms[column] = self.field.add(terms.get(column, self.field.zero), coefficient)
        return FieldCombination(self.field, terms, self.n)

    def is_zero(self, row: FieldCombination) -> bool:
        return row.is_zero

    def skip_mask(self, columns: Iterable[int]) -> FrozenSet[int]:
        return frozenset(columns)

    def lead(self, row: FieldCombination, skip: Optional[FrozenSet[int]] = None) -> int:
        if not skip:
            return row.ind
        return min((column for column in row.terms if column not in skip), default=self.n + 1)

    def coefficient(self, row: FieldCombination, column: int) -> Any:
        return row.coefficient(column)

    def evaluate(self, row: FieldCombination, assignment: Assignment) -> Any:
        values = assignment.values
        return self.field.dot((c, values[column]) for column, c in row.terms.items() if column in values)

    def solve_for(self, pivot: FieldCombination, column: int, assignment: Assignment) -> Any:
        values = assignment.values
        rest = self.field.dot(
            (c, values[col]) for col, c in pivot.terms.items() if col != column and col in values
        )
        scale = self.field.negate(self.field.invert(pivot.coefficient(column)))
        return self.field.multiply(scale, rest)

    def eliminate(self, row: FieldCombination, pivot: FieldCombination, column: int) -> Tuple[FieldCombination, Any]:
        factor = self.field.multiply(row.coefficient(column), self.field.invert(pivot.coefficient(column)))
        return row.axpy(self.field.negate(factor), pivot), factor

    def support(self, row: FieldCombination) -> Tuple[int, ...]:
        return row.support()


class RowAlgebraFactory:
    """Factory for row algebras with fallback to the generic field path."""

    @staticmethod
    def create(n: int, kind: Union[str, RowAlgebra, None] = "auto", field_: Optional[BaseField] = None) -> RowAlgebra:
        """Create a row algebra.

        Args:
            n: Number of columns
            kind: ``"auto"``, ``"bitset"`` or ``"field"``; an existing algebra
                is returned as is
            field_: Coefficient field, GF(2) by default

        Returns:
            The bitset algebra when the field is GF(2) and ``kind`` allows it,
            otherwise the generic field algebra

        Raises:
            ValueError: On an unknown kind, or ``"bitset"`` with a field other than GF(2)
        """
        if isinstance(kind, RowAlgebra):
            return kind
        field_ = field_ or GF2
        kind = (kind or "auto").lower()
        if kind == "bitset":
            return BitsetRowAlgebra(n, field_)
        if kind == "field":
            return FieldRowAlgebra(n, field_)
        if kind != "auto":
            raise ValueError(f"unknown row algebra {kind!r}; expected auto, bitset or field")
        if isinstance(field_, GF2Field):
            return BitsetRowAlgebra(n, field_)
        logger.info("Field %s has no bitset rows, using generic field rows", field_.name)
        return FieldRowAlgebra(n, field_)


__all__ = [
    "Assignment",
    "RowAlgebra",
    "BitsetRowAlgebra",
    "FieldRowAlgebra",
    "RowAlgebraFactory",
]
