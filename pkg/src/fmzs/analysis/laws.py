"""Fibonacci-like recurrences e_k = e_{k-2} + e_{k-3} on dimension sequences."""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Mapping, Optional

from .reference import MJPO_EXCEPTIONS


@dataclass(frozen=True)
class LawReport:
    """Recurrence check over a contiguous weight range.

    Attributes:
        family: Family tag
        differences: e_k - e_{k-2} - e_{k-3} for every checkable k
        exceptions: Weights where the recurrence fails
        expected_exceptions: The exceptions the family should show, None when
            no law is asserted
    """

    family: str
    differences: Dict[int, int]
    exceptions: FrozenSet[int]
    expected_exceptions: Optional[FrozenSet[int]]

    @property
    def holds(self) -> Optional[bool]:
        """None when no law is asserted for the family."""
        if self.expected_exceptions is None:
            return None
        return self.exceptions == self.expected_exceptions


def fibonacci_law_check(family: str, dims: Mapping[int, int]) -> LawReport:
    """Check the recurrence on computed dimensions.

    EDS must satisfy it everywhere. MJPO fails exactly at weights 7 and 15
    (those inside the range). KNT only gets its difference sequence.

    Args:
        family: ``"eds"``, ``"mjpo"`` or ``"knt"`` (anything else is reported only)
        dims: Dimension by weight over a contiguous range

    Raises:
        ValueError: If the weights are not contiguous
    """
    weights = sorted(dims)
    if weights and weights != list(range(weights[0], weights[-1] + 1)):
        raise ValueError(f"weights must be contiguous, got {weights}")
    differences = {
        k: dims[k] - dims[k - 2] - dims[k - 3] for k in weights if k - 3 in dims
    }
    exceptions = frozenset(k for k, diff in differences.items() if diff)
    family = family.lower()
    if family == "eds":
        expected: Optional[FrozenSet[int]] = frozenset()
    elif family == "mjpo":
        expected = frozenset(k for k in MJPO_EXCEPTIONS if k in differences)
    else:
        expected = None
    return LawReport(family, differences, exceptions, expected)


__all__ = ["LawReport", "fibonacci_law_check"]
