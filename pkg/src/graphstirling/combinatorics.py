"""Exact Stirling numbers of the second kind, Bell numbers, and binomials.

Everything here is plain Python integer arithmetic.  The two cached
sequences grow row by row on demand and never shrink, so values handed
out earlier stay valid for the lifetime of the process.
"""

from __future__ import annotations

import math

__all__ = [
    "BellSequence",
    "StirlingTriangle",
    "bell",
    "bell_or_zero",
    "binomial",
    "default_bells",
    "default_triangle",
    "ratio_to_float",
    "stirling",
    "stirling_row",
]


def binomial(n: int, k: int) -> int:
    """C(n, k), with 0 for any k outside 0..n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


class StirlingTriangle:
    """Rows of S(n, k) built with S(n, k) = k*S(n-1, k) + S(n-1, k-1)."""

    def __init__(self) -> None:
        self._rows: list[list[int]] = [[1]]

    def _extend_to(self, n: int) -> None:
        while len(self._rows) <= n:
            prev = self._rows[-1]
            m = len(self._rows)
            row = [0] * (m + 1)
            for k in range(1, m):
                row[k] = k * prev[k] + prev[k - 1]
            row[m] = 1
            self._rows.append(row)

    def value(self, n: int, k: int) -> int:
        if n < 0:
            raise ValueError("n must be non-negative")
        if k < 0 or k > n:
            return 0
        self._extend_to(n)
        return self._rows[n][k]

    def row(self, n: int) -> list[int]:
        """[S(n, 0), ..., S(n, n)] as a fresh list."""
        if n < 0:
            raise ValueError("n must be non-negative")
        self._extend_to(n)
        return list(self._rows[n])

    def __len__(self) -> int:
        return len(self._rows)


class BellSequence:
    """Bell numbers grown through the Aitken array (additions only).

    Only the last array row is retained between extensions; the Bell
    values themselves accumulate in ``self._values``.
    """

    def __init__(self, values: list[int] | None = None) -> None:
        if values:
            self._values = list(values)
            self._last_row: list[int] | None = None
        else:
            self._values = [1]
            self._last_row = [1]

    def _rebuild_row(self, n: int) -> list[int]:
        row = [1]
        for _ in range(n):
            nxt = [row[-1]]
            for x in row:
                nxt.append(nxt[-1] + x)
            row = nxt
        return row

    def _extend_to(self, n: int) -> None:
        if len(self._values) > n:
            return
        if self._last_row is None:
            # seeded from stored values; the resume row is only needed now
            self._last_row = self._rebuild_row(len(self._values) - 1)
        while len(self._values) <= n:
            nxt = [self._last_row[-1]]
            for x in self._last_row:
                nxt.append(nxt[-1] + x)
            self._last_row = nxt
            self._values.append(nxt[0])

    def value(self, n: int) -> int:
        if n < 0:
            raise ValueError("n must be non-negative")
        self._extend_to(n)
        return self._values[n]

    def value_or_zero(self, n: int) -> int:
        """B_n, but 0 for negative index (empty alternating-sum tail)."""
        return self.value(n) if n >= 0 else 0

    def known(self) -> list[int]:
        """All values computed so far, B_0 first."""
        return list(self._values)

    def adopt(self, values: list[int]) -> None:
        """Absorb a longer run of already-validated values.

        The overlap must agree with what this sequence has computed;
        shorter or equal runs are ignored.
        """
        overlap = min(len(values), len(self._values))
        if values[:overlap] != self._values[:overlap]:
            raise ValueError("conflicting Bell values")
        if len(values) > len(self._values):
            self._values = list(values)
            self._last_row = None

    def __len__(self) -> int:
        return len(self._values)


default_triangle = StirlingTriangle()
default_bells = BellSequence()


def stirling(n: int, k: int) -> int:
    """S(n, k): partitions of an n-set into exactly k non-empty blocks."""
    return default_triangle.value(n, k)


def stirling_row(n: int) -> list[int]:
    return default_triangle.row(n)


def bell(n: int) -> int:
    return default_bells.value(n)


def bell_or_zero(n: int) -> int:
    return default_bells.value_or_zero(n)


def ratio_to_float(num: int, den: int, digits: int = 30) -> float:
    """Round num/den to a float via scaled integer division.

    Both operands may be thousands of digits long; neither is ever
    converted to float directly.  The quotient is carried to ``digits``
    significant decimal digits before the final rounding, so any ratio
    of modest magnitude comes out correct to machine precision.
    """
    if den == 0:
        raise ZeroDivisionError("ratio_to_float with zero denominator")
    if num == 0:
        return 0.0
    sign = 1.0
    if (num < 0) != (den < 0):
        sign = -1.0
    num, den = abs(num), abs(den)
    # decimal shift that leaves roughly `digits` digits in the quotient
    shift = digits - (len(str(num)) - len(str(den)))
    if shift >= 0:
        q = (num * 10**shift) // den
        return sign * (q / 10**shift) if shift < 300 else sign * float(
            f"{q}e-{shift}"
        )
    q = num // (den * 10**-shift)
    return sign * float(f"{q}e{-shift}")
