"""Exact sawtooth and Dedekind sum arithmetic.

Conventions: ((x)) is the sawtooth function, 0 at integers and x - floor(x) - 1/2
otherwise.  s(a, b; x, y) generalizes the classical Dedekind sum with rational
offsets.  Every function here returns exact Fractions; nothing is ever rounded.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

Rational = int | Fraction


def sawtooth(x: Rational) -> Fraction:
    """((x)): 0 if x is an integer, else x - floor(x) - 1/2."""
    x = Fraction(x)
    n, d = x.numerator, x.denominator
    if d == 1:
        return Fraction(0)
    return Fraction(2 * (n % d) - d, 2 * d)


def divides_indicator(a: int, b: int) -> int:
    """1 if a divides b, else 0.  a must be nonzero."""
    if a == 0:
        raise ValueError("zero is not a valid divisor")
    return 1 if b % a == 0 else 0


def divides_indicator_pair(p: int, q: int, b: int) -> int:
    """How many of p, q divide b (0, 1, or 2)."""
    return divides_indicator(p, b) + divides_indicator(q, b)


def mod_inverse_neg(a: int, b: int) -> int:
    """The unique a* in [0, b) with a* a = -1 (mod b).

    Needs gcd(a, b) = 1 and b >= 1; for b = 1 the answer is 0.
    """
    if b < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(a, b) != 1:
        raise ValueError(f"{a} is not invertible mod {b}")
    return (-pow(a, -1, b)) % b


def dedekind_sum_general(a: int, b: int, x: Rational = 0, y: Rational = 0) -> Fraction:
    """s(a, b; x, y) = sum over i in [0, b) of (((i + y)/b)) ((a(i + y)/b + x)).

    The summand is invariant under shifting x or y by an integer, so both are
    reduced mod 1 up front; for integer y the sum is also invariant under
    a -> a mod b.  Computed by direct summation, exactly, over the fixed
    common denominator of all terms.  b must be positive.
    """
    if b < 1:
        raise ValueError("b must be positive")
    x = Fraction(x)
    y = Fraction(y)
    xn, xd = x.numerator % x.denominator, x.denominator
    yn, yd = y.numerator % y.denominator, y.denominator
    if yn == 0:
        yd = 1
        a = a % b
    return _dedekind_general(a, b, xn, xd, yn, yd)


@lru_cache(maxsize=None)
def _dedekind_general(a: int, b: int, xn: int, xd: int, yn: int, yd: int) -> Fraction:
    # Term i is ((r1/d1)) ((r2/d2)) with d1 = b yd and d2 = b yd xd constant in i,
    # so 4 d1 d2 times the sum accumulates as a single integer.
    d1 = b * yd
    d2 = d1 * xd
    acc = 0
    for i in range(b):
        n1 = i * yd + yn
        r1 = n1 % d1
        if r1 == 0:
            continue
        r2 = (a * n1 * xd + xn * d1) % d2
        if r2 == 0:
            continue
        acc += (2 * r1 - d1) * (2 * r2 - d2)
    return Fraction(acc, 4 * d1 * d2)


def dedekind_sum(a: int, b: int) -> Fraction:
    """Classical Dedekind sum s(a, b), the zero-offset case of the general sum."""
    return dedekind_sum_general(a, b)


def sawtooth_partial_sum(a: int, b: int, m: int) -> Fraction:
    """sum over j in [0, m) of ((j a / b)), in closed form.

    With a* the negative inverse of a mod b this equals
    -((m a / b))/2 - s(a*, b; m/b, 0) + s(a*, b).  Both sides are b-periodic
    in m, since the sum over any full period vanishes.  Needs gcd(a, b) = 1
    and m >= 0.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    astar = mod_inverse_neg(a, b)
    return (
        -sawtooth(Fraction(m * a, b)) / 2
        - dedekind_sum_general(astar, b, Fraction(m, b))
        + dedekind_sum(astar, b)
    )
