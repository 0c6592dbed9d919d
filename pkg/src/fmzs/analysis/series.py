"""Exact generating series for the expected dimensions.

* d_k: coefficients of 1 / (1 - X^2 - X^3)
* c(k, r): coefficients of 1 / (1 - (X^2 + X^3) Y), equal to binom(r, k - 2r)
* Broadhurst-Kreimer: coefficients of (1 + E Y) / (1 - O Y + S Y^2 (1 - Y^2))
  with E = X^2/(1-X^2), O = X^3/(1-X^2), S = X^12/((1-X^4)(1-X^6))
"""

from dataclasses import dataclass
from math import comb
from typing import Dict, Optional, Tuple

MAX_WEIGHT = 64


class Series:
    """Bivariate integer power series in X (weight) and Y (depth), truncated."""

    def __init__(self, x_max: int, y_max: int, coefficients: Optional[Dict[Tuple[int, int], int]] = None):
        self.x_max = x_max
        self.y_max = y_max
        self.c = [[0] * (y_max + 1) for _ in range(x_max + 1)]
        for (i, j), value in (coefficients or {}).items():
            if i <= x_max and j <= y_max:
                self.c[i][j] += value

    def _like(self) -> "Series":
        return Series(self.x_max, self.y_max)

    @classmethod
    def monomial(cls, x_max: int, y_max: int, i: int, j: int = 0, value: int = 1) -> "Series":
        return cls(x_max, y_max, {(i, j): value})

    def __getitem__(self, key: Tuple[int, int]) -> int:
        i, j = key
        return self.c[i][j]

    def __add__(self, other: "Series") -> "Series":
        out = self._like()
        for i in range(self.x_max + 1):
            for j in range(self.y_max + 1):
                out.c[i][j] = self.c[i][j] + other.c[i][j]
        return out

    def __neg__(self) -> "Series":
        out = self._like()
        out.c = [[-v for v in row] for row in self.c]
        return out

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def __mul__(self, other: "Series") -> "Series":
        out = self._like()
        for i1 in range(self.x_max + 1):
            for j1 in range(self.y_max + 1):
                a = self.c[i1][j1]
                if not a:
                    continue
                for i2 in range(self.x_max + 1 - i1):
                    row = other.c[i2]
                    for j2 in range(self.y_max + 1 - j1):
                        if row[j2]:
                            out.c[i1 + i2][j1 + j2] += a * row[j2]
        return out

    def inverse(self) -> "Series":
        """Multiplicative inverse; the constant term must be 1 or -1."""
        constant = self.c[0][0]
        if constant not in (1, -1):
            raise ValueError(f"series with constant term {constant} has no integer inverse")
        out = self._like()
        for i in range(self.x_max + 1):
            for j in range(self.y_max + 1):
                if i == 0 and j == 0:
                    out.c[0][0] = constant
                    continue
                total = 0
                for i1 in range(i + 1):
                    for j1 in range(j + 1):
                        if (i1, j1) != (0, 0) and self.c[i1][j1]:
                            total += self.c[i1][j1] * out.c[i - i1][j - j1]
                out.c[i][j] = -total * constant
        return out

    def __truediv__(self, other: "Series") -> "Series":
        return self * other.inverse()


@dataclass(frozen=True)
class SeriesTable:
    """Expected dimensions up to a weight and depth.

    Attributes:
        k_max: Largest weight
        r_max: Largest depth
        d: d_k for k = 0 .. k_max
        c: c(k, r) as rows k = 0 .. k_max of depths 0 .. r_max
        bk: Broadhurst-Kreimer dimensions, same shape as ``c``
    """

    k_max: int
    r_max: int
    d: Tuple[int, ...]
    c: Tuple[Tuple[int, ...], ...]
    bk: Tuple[Tuple[int, ...], ...]

    def bk_total(self, k: int) -> int:
        return sum(self.bk[k])


def _rows(series: Series) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(row) for row in series.c)


def expected_tables(k_max: int, r_max: Optional[int] = None) -> SeriesTable:
    """Expand the three generating series.

    Args:
        k_max: Largest weight, at most 64
        r_max: Largest depth, ``k_max`` by default

    Returns:
        SeriesTable of exact integer coefficients
    """
    if not 0 <= k_max <= MAX_WEIGHT:
        raise ValueError(f"k_max must lie in [0, {MAX_WEIGHT}], got {k_max}")
    if r_max is None:
        r_max = k_max
    if r_max < 0:
        raise ValueError(f"r_max must be non-negative, got {r_max}")

    def m(i: int, j: int = 0, value: int = 1) -> Series:
        return Series.monomial(k_max, r_max, i, j, value)

    one = m(0)
    d_series = one / (one - m(2) - m(3))
    c_series = one / (one - m(2, 1) - m(3, 1))

    even = one / (one - m(2))
    e_series = m(2) * even
    o_series = m(3) * even
    s_series = m(12) / ((one - m(4)) * (one - m(6)))
    y = m(0, 1)
    numerator = one + e_series * y
    denominator = one - o_series * y + s_series * m(0, 2) * (one - m(0, 2))
    bk_series = numerator / denominator

    return SeriesTable(
        k_max=k_max,
        r_max=r_max,
        d=tuple(d_series[k, 0] for k in range(k_max + 1)),
        c=_rows(c_series),
        bk=_rows(bk_series),
    )


def pascal_c(k: int, r: int) -> int:
    """Number of Hoffman indices of weight k and depth r.

    A depth-r index with parts in {2, 3} has k - 2r threes, so the count is
    binom(r, k - 2r).
    """
    threes = k - 2 * r
    if r < 0 or threes < 0 or threes > r:
        return 0
    return comb(r, threes)


__all__ = ["Series", "SeriesTable", "expected_tables", "pascal_c", "MAX_WEIGHT"]
