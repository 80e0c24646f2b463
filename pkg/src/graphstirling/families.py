"""Partition counts, Stirling polynomials, and moments for forests and cycles.

A partition of a graph's vertex set is admissible when every block is an
independent set.  For a forest on n vertices with c components the number
of admissible partitions into k blocks depends only on n and c, so the
graphs handled here are described by those shape parameters alone:
``Forest(n, c)`` and ``Cycle(n)``.

Counts, polynomials, and moment numerators are exact integers or
rationals throughout; floats appear only in the reporting fields.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .combinatorics import (
    bell,
    binomial,
    default_triangle,
    ratio_to_float,
)
from .errors import VerificationError
from .polynomials import (
    IntPolynomial,
    apply_x_plus_xD,
    falling_factorial_combination,
)

__all__ = [
    "Cycle",
    "Forest",
    "GraphFamily",
    "MomentReport",
    "PartitionCountVector",
    "bell_moment_sum",
    "chi",
    "chromatic_from_stirling",
    "chromatic_polynomial",
    "cycle_count_k3",
    "cycle_count_k4",
    "empty_graph",
    "graph_bell",
    "label",
    "moments",
    "pascal_identity_check",
    "path",
    "stirling_polynomial",
    "stirling_polynomial_via_operator",
    "stirling_vector",
    "stirling_via_chromatic",
]


@dataclass(frozen=True)
class Forest:
    """Any forest on n vertices with c connected components."""

    n: int
    c: int

    def __post_init__(self) -> None:
        if self.n == 0 and self.c == 0:
            return
        if not 1 <= self.c <= self.n:
            raise ValueError(f"forest needs 1 <= c <= n, got n={self.n}, c={self.c}")


@dataclass(frozen=True)
class Cycle:
    """The cycle on n vertices; n = 2 means a single edge."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"cycle needs n >= 2, got n={self.n}")


GraphFamily = Forest | Cycle


def path(n: int) -> Forest:
    return Forest(n, 1)


def empty_graph(n: int) -> Forest:
    return Forest(n, n) if n else Forest(0, 0)


def label(g: GraphFamily) -> str:
    if isinstance(g, Cycle):
        return f"cycle-{g.n}"
    if g.c == 1:
        return f"path-{g.n}"
    if g.c == g.n:
        return f"empty-{g.n}"
    return f"forest-{g.n}-{g.c}"


@dataclass(frozen=True)
class PartitionCountVector:
    """counts[k] = number of partitions of the graph into k independent blocks."""

    graph: object
    counts: tuple[int, ...]


def chi(g: GraphFamily) -> int:
    """Chromatic number (0 for the empty vertex set)."""
    if isinstance(g, Cycle):
        return 2 if g.n % 2 == 0 else 3
    if g.n == 0:
        return 0
    return 1 if g.c == g.n else 2


def chromatic_polynomial(g: GraphFamily) -> IntPolynomial:
    x = IntPolynomial([0, 1])
    xm1 = IntPolynomial([-1, 1])
    if isinstance(g, Cycle):
        p = IntPolynomial([1])
        for _ in range(g.n):
            p = p * xm1
        return p + xm1 * (-1) ** g.n
    p = IntPolynomial([1])
    for _ in range(g.c):
        p = p * x
    for _ in range(g.n - g.c):
        p = p * xm1
    return p


@lru_cache(maxsize=None)
def stirling_vector(g: GraphFamily) -> PartitionCountVector:
    """Exact partition counts by block count, indices 0..n."""
    n = g.n
    counts = [0] * (n + 1)
    if isinstance(g, Cycle):
        # alternating tail stops at i = n-2, so the deepest term is S(1, k-1)
        sign = 1
        for i in range(n - 1):
            row = default_triangle.row(n - 1 - i)
            for j, s in enumerate(row):
                if s:
                    counts[j + 1] += sign * s
            sign = -sign
    elif n == 0:
        counts = [1]
    else:
        for i in range(g.c):
            w = binomial(g.c - 1, i)
            row = default_triangle.row(n - 1 - i)
            for j, s in enumerate(row):
                if s:
                    counts[j + 1] += w * s
    return PartitionCountVector(g, tuple(counts))


def stirling_polynomial(g: GraphFamily) -> IntPolynomial:
    return IntPolynomial(stirling_vector(g).counts)


def stirling_polynomial_via_operator(g: GraphFamily) -> IntPolynomial:
    """Same polynomial, built through the x + xD recurrence."""
    if isinstance(g, Cycle):
        p = IntPolynomial([0, 0, 1])
        for m in range(3, g.n + 1):
            p = apply_x_plus_xD(p.divide_by_x_power(1)).shifted_up(1)
            p = p + IntPolynomial([0, 0, (-1) ** m])
        return p
    p = IntPolynomial(default_triangle.row(g.c))
    for _ in range(g.n - g.c):
        p = apply_x_plus_xD(p.divide_by_x_power(1)).shifted_up(1)
    return p


def pascal_identity_check(n: int, c: int) -> bool:
    """Does adding one component obey the two-term addition rule?"""
    if not 1 <= c <= n:
        raise ValueError("need 1 <= c <= n")
    lhs = stirling_polynomial(Forest(n + 1, c + 1))
    rhs = stirling_polynomial(Forest(n + 1, c)) + stirling_polynomial(Forest(n, c))
    return lhs == rhs


def stirling_via_chromatic(g: GraphFamily, k: int) -> int:
    """Partition count into k blocks by inclusion-exclusion over colorings.

    The alternating sum must be divisible by k!; anything else means the
    chromatic polynomial and the counts disagree, which is reported as a
    verification failure rather than rounded away.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    cp = chromatic_polynomial(g)
    total = 0
    for i in range(k + 1):
        term = binomial(k, i) * cp.evaluate(k - i)
        total += -term if i % 2 else term
    q, r = divmod(total, math.factorial(k))
    if r:
        raise VerificationError(
            f"inclusion-exclusion sum {total} not divisible by {k}!"
        )
    return q


def chromatic_from_stirling(g: GraphFamily) -> IntPolynomial:
    """Chromatic polynomial rebuilt from the counts via falling factorials."""
    return falling_factorial_combination(stirling_vector(g).counts)


def bell_moment_sum(g: GraphFamily, shift: int) -> int:
    """Weighted Bell tail used by the moment closed forms.

    Forest(n, c): sum over i < c of C(c-1, i) * B(n-1+shift-i).
    Cycle(n): alternating sum over i <= n-2 of B(n-1+shift-i).
    """
    if isinstance(g, Cycle):
        total = 0
        sign = 1
        for i in range(g.n - 1):
            total += sign * bell(g.n - 1 + shift - i)
            sign = -sign
        return total
    if g.n == 0:
        return 1 if shift == 0 else 0
    return sum(
        binomial(g.c - 1, i) * bell(g.n - 1 + shift - i) for i in range(g.c)
    )


def graph_bell(g: GraphFamily) -> int:
    """Total number of admissible partitions."""
    return bell_moment_sum(g, 0)


def cycle_count_k3(n: int) -> int:
    """Partitions of the n-cycle into exactly 3 blocks, closed form."""
    if n < 2:
        raise ValueError("cycle needs n >= 2")
    num = 2**n - (-1) ** n - 3
    q, r = divmod(num, 6)
    if r:
        raise VerificationError(f"closed form numerator {num} not divisible by 6")
    return q


def cycle_count_k4(n: int) -> int:
    """Partitions of the n-cycle into exactly 4 blocks, closed form."""
    if n < 2:
        raise ValueError("cycle needs n >= 2")
    num = 3**n - 4 * 2**n + (-1) ** n + 6
    q, r = divmod(num, 24)
    if r:
        raise VerificationError(f"closed form numerator {num} not divisible by 24")
    return q


@dataclass(frozen=True)
class MomentReport:
    """Block-count distribution moments, exact and estimated.

    The two exact routes must agree: ``*_exact`` is summed over the
    partition-count vector, ``*_formula`` comes from the Bell-number
    expressions.  Floats are rounded from the exact rationals; the
    estimates are the n/W(n) family.
    """

    graph: GraphFamily
    mean_exact: Fraction
    variance_exact: Fraction
    mean_formula: Fraction
    variance_formula: Fraction
    mean_float: float
    variance_float: float
    mean_estimate: float
    variance_estimate: float


def moments(g: GraphFamily) -> MomentReport:
    """Mean and variance of the block count, by two exact routes.

    The vector route sums k and k^2 against the counts; the formula
    route forms the same rationals from shifted Bell-number sums.  They
    agree identically, which is one of the package's standing checks.
    """
    from .asymptotics import lambert_w

    counts = stirling_vector(g).counts
    total = sum(counts)
    s1 = sum(k * a for k, a in enumerate(counts))
    s2 = sum(k * k * a for k, a in enumerate(counts))
    mean = Fraction(s1, total)
    variance = Fraction(s2, total) - mean * mean

    if g.n == 0:
        mean_cf, var_cf = mean, variance
    else:
        denom = bell_moment_sum(g, 0)
        mean_cf = Fraction(bell_moment_sum(g, 1), denom)
        var_cf = Fraction(bell_moment_sum(g, 2), denom) - mean_cf * mean_cf - 1

    if g.n >= 1:
        w = lambert_w(float(g.n))
        mean_est = g.n / w
        var_est = g.n / (w * (w + 1.0))
    else:
        mean_est = var_est = math.nan

    return MomentReport(
        graph=g,
        mean_exact=mean,
        variance_exact=variance,
        mean_formula=mean_cf,
        variance_formula=var_cf,
        mean_float=ratio_to_float(mean.numerator, mean.denominator),
        variance_float=ratio_to_float(variance.numerator, variance.denominator),
        mean_estimate=mean_est,
        variance_estimate=var_est,
    )
