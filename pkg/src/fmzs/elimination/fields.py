"""Scalar field interface for the elimination engine."""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from dataclasses import field as dc_field
from typing import Any, Dict, Iterable, Mapping, Tuple


class BaseField(ABC):
    """Base class for coefficient fields (GF(2) is the one shipped)."""

    name: str = "field"

    @property
    @abstractmethod
    def zero(self) -> Any:
        """Additive identity."""

    @property
    @abstractmethod
    def one(self) -> Any:
        """Multiplicative identity."""

    @abstractmethod
    def add(self, a: Any, b: Any) -> Any:
        """Sum of two field elements."""

    @abstractmethod
    def negate(self, a: Any) -> Any:
        """Additive inverse."""

    @abstractmethod
    def multiply(self, a: Any, b: Any) -> Any:
        """Product of two field elements."""

    @abstractmethod
    def invert(self, a: Any) -> Any:
        """Multiplicative inverse of a non-zero element.

        Raises:
            ZeroDivisionError: If ``a`` is zero
        """

    def equal(self, a: Any, b: Any) -> bool:
        return a == b

    def is_zero(self, a: Any) -> bool:
        return self.equal(a, self.zero)

    def subtract(self, a: Any, b: Any) -> Any:
        return self.add(a, self.negate(b))

    def dot(self, pairs: Iterable[Tuple[Any, Any]]) -> Any:
        """Sum of products over ``(a, b)`` pairs."""
        total = self.zero
        for a, b in pairs:
            total = self.add(total, self.multiply(a, b))
        return total


class GF2Field(BaseField):
    """The two-element field: add is XOR, multiply is AND."""

    name = "GF(2)"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def negate(self, a: int) -> int:
        return a

    def multiply(self, a: int, b: int) -> int:
        return a & b

    def invert(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("0 has no inverse in GF(2)")
        return 1


GF2 = GF2Field()


@dataclass(frozen=True)
class FieldCombination:
    """Linear form sum(c_i x_i) over a field, in n variables.

    Attributes:
        field: Coefficient field
        terms: Column id to non-zero coefficient
        n: Number of variables

    ``ind`` is the smallest column with a non-zero coefficient (n + 1 for the
    zero form) and ``cf`` its coefficient (zero for the zero form).
    """

    field: BaseField
    terms: Mapping[int, Any]
    n: int
    ind: int = dc_field(init=False)
    cf: Any = dc_field(init=False)

    def __post_init__(self) -> None:
        cleaned: Dict[int, Any] = {c: v for c, v in self.terms.items() if not self.field.is_zero(v)}
        object.__setattr__(self, "terms", cleaned)
        lead = min(cleaned) if cleaned else self.n + 1
        object.__setattr__(self, "ind", lead)
        object.__setattr__(self, "cf", cleaned.get(lead, self.field.zero))

    @classmethod
    def from_support(cls, support: Iterable[int], n: int, field_: BaseField = GF2) -> "FieldCombination":
        return cls(field_, {column: field_.one for column in support}, n)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, column: int) -> Any:
        return self.terms.get(column, self.field.zero)

    def support(self) -> Tuple[int, ...]:
        return tuple(sorted(self.terms))

    def axpy(self, scale: Any, other: "FieldCombination") -> "FieldCombination":
        """self + scale * other."""
        merged = dict(self.terms)
        for column, value in other.terms.items():
            merged[column] = self.field.add(merged.get(column, self.field.zero), self.field.multiply(scale, value))
        return FieldCombination(self.field, merged, self.n)


__all__ = ["BaseField", "GF2Field", "GF2", "FieldCombination"]
