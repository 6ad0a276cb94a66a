"""Exact integer and rational arithmetic helpers.

Every quantity is a Python int (arbitrary precision) or a
``fractions.Fraction``; nothing here ever rounds or overflows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

# Semantic aliases: counts, determinants and dimensions are exact integers,
# module coefficients are exact rationals.
BigInt = int
Rational = Fraction


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), with the convention C(n, k) = 0 for
    k < 0 or k > n.  The upper index must be nonnegative."""
    if n < 0:
        raise ValueError(f"binomial upper index must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def catalan(n: int) -> int:
    """Catalan number c_n = C(2n, n) / (n + 1), defined for n >= 1."""
    if n < 1:
        raise ValueError(f"catalan index must be positive, got {n}")
    return binomial(2 * n, n) // (n + 1)


def hockey_stick_sides(a: int, b: int, p: int) -> tuple[int, int]:
    """Evaluate both sides of sum(C(z, p), z = a..a+b-1) = C(a+b, p+1) - C(a, p+1).

    Returns ``(left, right)`` where the left side is computed as an explicit
    sum (empty when b = 0) and the right side from two binomials.  Their
    equality is a tested property, never an assumption.
    """
    if a < 0 or b < 0 or p < 0:
        raise ValueError("hockey_stick_sides arguments must be nonnegative")
    left = sum(binomial(z, p) for z in range(a, a + b))
    right = binomial(a + b, p + 1) - binomial(a, p + 1)
    return left, right


@dataclass(frozen=True)
class IntMatrix:
    """Rectangular matrix of exact integers."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        for row in rows:
            if len(row) != len(rows[0]):
                raise ValueError("matrix rows must all have the same length")
            for x in row:
                if not isinstance(x, int):
                    raise ValueError(f"matrix entries must be ints, got {x!r}")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_upper_triangular(self) -> bool:
        return all(
            self.entries[i][j] == 0
            for i in range(self.rows)
            for j in range(min(i, self.cols))
        )


def det_exact(m: IntMatrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination.

    The 0x0 matrix has determinant 1 (empty product).
    """
    if not m.is_square():
        raise ValueError(f"determinant needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    if n == 0:
        return 1
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Bareiss update; the division by the previous pivot is exact.
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]
