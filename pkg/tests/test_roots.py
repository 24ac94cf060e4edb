"""
Tests for integer polynomials, Sturm root counting and exact root ordering.

Run with: pytest tests/test_roots.py -v
"""

from fractions import Fraction

import pytest

from src.models.errors import InvalidIntervalError
from src.models.polynomial import IntPolynomial, poly_gcd, squarefree_part
from src.models.types import Ordering
from src.services.graph_builders import path, star
from src.services.root_isolation import compare_largest_roots, largest_real_root, sturm_root_count
from src.services.spectral_service import char_poly_exact

X = IntPolynomial([0, 1])


def test_polynomial_arithmetic():
    p = X * X - 1
    assert p == IntPolynomial([-1, 0, 1])
    assert (X - 1) * (X + 1) == p
    assert (X + 1) ** 3 == IntPolynomial([1, 3, 3, 1])
    assert p.derivative() == IntPolynomial([0, 2])
    assert IntPolynomial([0, 0, 0]).is_zero()
    assert IntPolynomial([3, 0, 0]).degree == 0
    assert str(IntPolynomial([-2, -3, 0, 1])) == "x^3 - 3x - 2"


def test_sign_at_rational_points():
    p = X * X - 2
    assert p.sign_at(Fraction(7, 5)) == -1
    assert p.sign_at(Fraction(3, 2)) == 1
    assert (X - 1).sign_at(1) == 0


def test_gcd_and_squarefree_part():
    p = (X - 1) ** 2 * (X + 2)
    assert poly_gcd(p, p.derivative()) == X - 1
    assert squarefree_part(p) == (X - 1) * (X + 2)
    assert poly_gcd(X - 1, X + 1) == IntPolynomial([1])


def test_json_round_trip_of_a_characteristic_polynomial():
    p = char_poly_exact(star(4))
    assert IntPolynomial.from_json(p.to_json()) == p


def test_sturm_root_count():
    assert sturm_root_count(X * X - 1, 0, 2) == 1
    assert sturm_root_count(X * X - 1, -2, 2) == 2
    # half-open: the root at -1 is excluded, the one at 1 included
    assert sturm_root_count(X * X - 1, -1, 1) == 1
    cubic = IntPolynomial([-2, -3, 0, 1])
    assert sturm_root_count(cubic, 1.9, 2.1) == 1
    assert sturm_root_count(cubic, -5, 5) == 2
    assert sturm_root_count(char_poly_exact(path(5)), 1.99, 2) == 0
    with pytest.raises(InvalidIntervalError):
        sturm_root_count(cubic, 2, 2)


def test_largest_real_root():
    assert largest_real_root(X * X - 2) == pytest.approx(2 ** 0.5, abs=1e-14)
    assert largest_real_root(IntPolynomial([-2, -3, 0, 1])) == pytest.approx(2.0, abs=1e-14)


def test_compare_largest_roots():
    a, b = X * X - 2, X * X - 3
    assert compare_largest_roots(a, b) == Ordering.LT
    assert compare_largest_roots(b, a) == Ordering.GT
    assert compare_largest_roots(a, a * (X + 5)) == Ordering.EQ
    # equal up to a repeated factor
    assert compare_largest_roots((X - 2) ** 2, (X - 2) * (X + 1)) == Ordering.EQ
    # shared root that is the largest of only one polynomial
    assert compare_largest_roots((X - 1) * (X - 3), (X - 1) * (X + 4)) == Ordering.GT


def test_subgraph_has_smaller_largest_root():
    assert compare_largest_roots(char_poly_exact(path(6)), char_poly_exact(path(7))) == Ordering.LT
    assert compare_largest_roots(char_poly_exact(star(3)), char_poly_exact(star(4))) == Ordering.LT


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
