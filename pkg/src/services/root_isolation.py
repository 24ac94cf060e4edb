"""Sturm-sequence root counting and exact ordering of largest real roots."""

from __future__ import annotations

from fractions import Fraction
from math import ceil, gcd
from functools import reduce
from typing import List, Tuple, Union

from ..models.errors import InvalidIntervalError, InvalidParameterError
from ..models.polynomial import IntPolynomial, poly_gcd, squarefree_part
from ..models.types import Ordering

Rational = Union[int, Fraction, float, str]
Interval = Tuple[Fraction, Fraction]


def to_fraction(x: Rational) -> Fraction:
    """Exact rational; floats are read through their shortest decimal repr."""
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


def _reduce_positive(p: IntPolynomial) -> IntPolynomial:
    g = reduce(gcd, p.coeffs, 0)
    return IntPolynomial(c // g for c in p.coeffs) if g > 1 else p


class SturmChain:
    """Sturm sequence of the squarefree part of a polynomial."""

    def __init__(self, p: IntPolynomial):
        if p.is_zero():
            raise InvalidParameterError("the zero polynomial has no Sturm sequence")
        self.base = squarefree_part(p)
        chain: List[IntPolynomial] = [self.base]
        if self.base.degree >= 1:
            chain.append(_reduce_positive(self.base.derivative()))
            while True:
                rem = chain[-2].pseudo_remainder(chain[-1])
                if rem.is_zero():
                    break
                chain.append(_reduce_positive(-rem))
        self.chain = chain

    def variations(self, x: Fraction) -> int:
        signs = [s for s in (q.sign_at(x) for q in self.chain) if s]
        return sum(1 for s, t in zip(signs, signs[1:]) if s != t)

    def count(self, a: Fraction, b: Fraction) -> int:
        """Distinct real roots in (a, b]."""
        return self.variations(a) - self.variations(b)

    def root_bound(self) -> Fraction:
        """Integer B with every real root strictly inside (-B, B)."""
        p = self.base
        lc = abs(p.leading)
        return Fraction(1 + ceil(Fraction(max((abs(c) for c in p.coeffs[:-1]), default=0), lc)) + 1)


def sturm_root_count(p: IntPolynomial, a: Rational, b: Rational) -> int:
    """
    Count the distinct real roots of p in the half-open interval (a, b].

    Args:
        p: nonzero integer polynomial (reduced to its squarefree part internally)
        a: lower endpoint, exclusive
        b: upper endpoint, inclusive

    Returns:
        Number of distinct real roots
    """
    lo, hi = to_fraction(a), to_fraction(b)
    if lo >= hi:
        raise InvalidIntervalError(f"empty interval ({lo}, {hi}]")
    if p.degree <= 0:
        return 0
    return SturmChain(p).count(lo, hi)


def isolate_largest_root(chain: SturmChain) -> Interval:
    """Interval (lo, hi] holding the largest real root and no other root."""
    bound = chain.root_bound()
    lo, hi = -bound, bound
    total = chain.count(lo, hi)
    if total == 0:
        raise InvalidParameterError(f"{chain.base} has no real root")
    while total > 1:
        mid = (lo + hi) / 2
        upper = chain.count(mid, hi)
        if upper >= 1:
            lo, total = mid, upper
        else:
            hi = mid
    return lo, hi


def refine(chain: SturmChain, interval: Interval) -> Interval:
    """Halve an isolating interval."""
    lo, hi = interval
    mid = (lo + hi) / 2
    if chain.count(mid, hi) == 1:
        return mid, hi
    return lo, mid


def largest_real_root(p: IntPolynomial, width: Fraction = Fraction(1, 10**15)) -> float:
    """Largest real root of p to within the given interval width."""
    chain = SturmChain(p)
    interval = isolate_largest_root(chain)
    while interval[1] - interval[0] > width:
        interval = refine(chain, interval)
    return float((interval[0] + interval[1]) / 2)


def compare_largest_roots(p1: IntPolynomial, p2: IntPolynomial) -> Ordering:
    """
    Exact ordering of the largest real roots of p1 and p2.

    Equality is decided by the gcd: r1 = r2 exactly when both largest roots
    are roots of gcd(p1, p2). Otherwise the isolating intervals are bisected
    until they separate.
    """
    c1, c2 = SturmChain(p1), SturmChain(p2)
    i1, i2 = isolate_largest_root(c1), isolate_largest_root(c2)

    common = poly_gcd(c1.base, c2.base)
    if common.degree >= 1:
        cg = SturmChain(common)
        r1_shared = cg.count(*i1) >= 1
        r2_shared = cg.count(*i2) >= 1
        if r1_shared and r2_shared:
            return Ordering.EQ
        # a shared r1 is a root of p2, hence at most r2; it is not r2 itself
        if r1_shared:
            return Ordering.LT
        if r2_shared:
            return Ordering.GT

    while True:
        if i1[1] <= i2[0]:
            return Ordering.LT
        if i2[1] <= i1[0]:
            return Ordering.GT
        i1 = refine(c1, i1)
        i2 = refine(c2, i2)
