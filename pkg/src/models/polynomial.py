"""Exact polynomials with arbitrary-precision integer coefficients."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, List, Sequence, Tuple, Union

Number = Union[int, Fraction, float]


def _trim(coeffs: Iterable[int]) -> Tuple[int, ...]:
    values = list(coeffs)
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial sum(coeffs[i] * x**i) with integer coefficients.

    The tuple is stored in ascending degree with no trailing zeros, so the
    zero polynomial is the empty tuple.
    """

    coeffs: Tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        values = []
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                if isinstance(c, Fraction) and c.denominator == 1:
                    c = c.numerator
                else:
                    raise TypeError(f"coefficient {c!r} is not an integer")
            values.append(c)
        object.__setattr__(self, "coeffs", _trim(values))

    # ------------------------------------------------------------------
    # Constructors and conversion
    # ------------------------------------------------------------------

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coefficient])

    @classmethod
    def from_descending(cls, coeffs: Sequence[int]) -> "IntPolynomial":
        return cls(reversed(list(coeffs)))

    @classmethod
    def from_json(cls, text: str) -> "IntPolynomial":
        return cls(int(c) for c in json.loads(text))

    def to_json(self) -> str:
        return json.dumps(list(self.coeffs))

    def to_list(self) -> List[int]:
        return list(self.coeffs)

    # ------------------------------------------------------------------
    # Basic properties
    # ------------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def content(self) -> int:
        return reduce(gcd, self.coeffs, 0)

    def primitive(self) -> "IntPolynomial":
        """Divide by the content and make the leading coefficient positive."""
        if self.is_zero():
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPolynomial(c // g for c in self.coeffs)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def __add__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        other = _coerce(other)
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (size - len(self.coeffs))
        b = other.coeffs + (0,) * (size - len(other.coeffs))
        return IntPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        return _coerce(other) - self

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPolynomial":
        result = IntPolynomial([1])
        for _ in range(exponent):
            result = result * self
        return result

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by x**k."""
        return IntPolynomial([0] * k + list(self.coeffs)) if self.coeffs else self

    # ------------------------------------------------------------------
    # Evaluation
    # ------------------------------------------------------------------

    def __call__(self, x: Number) -> Number:
        value = 0 * x
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def sign_at(self, x: Fraction | int) -> int:
        """Exact sign of p(x) at a rational point, using integers only."""
        x = Fraction(x)
        num, den = x.numerator, x.denominator
        d = self.degree
        if d < 0:
            return 0
        # den^d * p(num/den) = sum c_i num^i den^(d-i), same sign since den > 0
        total = 0
        power_den = 1
        for c in reversed(self.coeffs):
            total = total * num + c * power_den
            power_den *= den
        return (total > 0) - (total < 0)

    # ------------------------------------------------------------------
    # Division over the rationals
    # ------------------------------------------------------------------

    def pseudo_remainder(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """Remainder of |lc(divisor)|^(k) * self by divisor, k = deg - deg + 1.

        The scaling factor is positive, so sign sequences built from the
        result match those of the true rational remainder.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        lc = divisor.leading
        scale = abs(lc)
        sign = 1 if lc > 0 else -1
        while len(rem) - 1 >= dd and rem:
            shift = len(rem) - 1 - dd
            top = rem[-1]
            # rem <- |lc| * rem - sign(lc) * top * x^shift * divisor
            rem = [scale * c for c in rem]
            for i, dc in enumerate(divisor.coeffs):
                rem[i + shift] -= sign * top * dc
            rem = list(_trim(rem))
        return IntPolynomial(rem)

    def divide_exact(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """Quotient self / divisor over Q, scaled to a primitive integer polynomial."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        dd = divisor.degree
        quotient = [Fraction(0)] * max(len(rem) - dd, 1)
        while len(rem) - 1 >= dd and any(rem):
            shift = len(rem) - 1 - dd
            factor = rem[-1] / divisor.leading
            quotient[shift] = factor
            for i, dc in enumerate(divisor.coeffs):
                rem[i + shift] -= factor * dc
            while rem and rem[-1] == 0:
                rem.pop()
        if any(rem):
            raise ValueError("division is not exact")
        scale = reduce(lcm, (q.denominator for q in quotient), 1)
        return IntPolynomial(int(q * scale) for q in quotient).primitive()

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                var = "x" if power == 1 else f"x^{power}"
                body = var if mag == 1 else f"{mag}{var}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def _coerce(value: "IntPolynomial | int") -> IntPolynomial:
    if isinstance(value, IntPolynomial):
        return value
    return IntPolynomial([value])


def poly_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient."""
    a, b = p.primitive(), q.primitive()
    while not b.is_zero():
        a, b = b, a.pseudo_remainder(b).primitive()
    return a.primitive()


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """p divided by gcd(p, p'), primitive."""
    if p.degree <= 0:
        return p.primitive()
    g = poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p.primitive()
    return p.divide_exact(g)
