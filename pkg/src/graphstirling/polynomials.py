"""Dense integer-coefficient polynomials with exact arithmetic.

Coefficients are stored in ascending order of the exponent and kept in
canonical trimmed form: no trailing zeros, the zero polynomial is the
empty tuple.  Instances are immutable and hashable, so they can key
caches safely.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "IntPolynomial",
    "apply_x_plus_xD",
    "falling_factorial_combination",
]

Scalar = Union[int, Fraction]


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    last = len(coeffs)
    while last > 0 and coeffs[last - 1] == 0:
        last -= 1
    return tuple(coeffs[:last])


class IntPolynomial:
    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        seq = list(coeffs)
        for c in seq:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient expected, got {type(c).__name__}")
        object.__setattr__(self, "coeffs", _trim(seq))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("IntPolynomial is immutable")

    # -- structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def trailing_zero_count(self) -> int:
        """Multiplicity of the root at 0 (degree+1 of the zero polynomial is 0)."""
        m = 0
        for c in self.coeffs:
            if c != 0:
                break
            m += 1
        return m

    def content(self) -> int:
        """Positive gcd of the coefficients, 0 for the zero polynomial."""
        return math.gcd(*self.coeffs) if self.coeffs else 0

    # -- ring operations ----------------------------------------------

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shifted_up(self, k: int) -> IntPolynomial:
        """Multiply by x^k."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def divide_by_x_power(self, k: int) -> IntPolynomial:
        """Exact division by x^k; the k lowest coefficients must vanish."""
        if k < 0:
            raise ValueError("power must be non-negative")
        if any(self.coeffs[:k]):
            raise ValueError(f"polynomial is not divisible by x^{k}")
        return IntPolynomial(self.coeffs[k:])

    def derivative(self) -> IntPolynomial:
        return IntPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x: Scalar) -> Scalar:
        """Exact Horner evaluation; Fraction in gives Fraction out."""
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- comparison / display -----------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                term = str(mag)
            else:
                xk = "x" if k == 1 else f"x^{k}"
                term = xk if mag == 1 else f"{mag}{xk}"
            parts.append((sign, term))
        first_sign, first_term = parts[0]
        text = ("-" if first_sign == "-" else "") + first_term
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


def apply_x_plus_xD(p: IntPolynomial) -> IntPolynomial:
    """The operator p |-> x*p + x*p'."""
    return (p + p.derivative()).shifted_up(1)


def falling_factorial_combination(weights: Sequence[int]) -> IntPolynomial:
    """Sum of weights[k] * x(x-1)...(x-k+1) over all k."""
    acc = IntPolynomial()
    ff = IntPolynomial([1])
    for k, w in enumerate(weights):
        if w:
            acc = acc + ff * w
        ff = ff * IntPolynomial([-k, 1])
    return acc
