"""Dedekind sums s(a, b) by three independent routes."""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from .algebra import divisors
from .cyclotomic import field, primitive_trace
from .errors import PreconditionError

__all__ = ["sawtooth", "dedekind_direct", "dedekind_fast", "dedekind_root_identity", "dedekind_reciprocity_rhs"]


def _check(a: int, b: int) -> None:
    if b < 1:
        raise PreconditionError(f"Dedekind sum needs b >= 1, got b={b}")
    if gcd(a, b) != 1:
        raise PreconditionError(f"Dedekind sum needs gcd(a, b) = 1, got gcd({a}, {b}) = {gcd(a, b)}")


def sawtooth(x: Fraction) -> Fraction:
    """((x)) = x - floor(x) - 1/2 off the integers, 0 on them."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - (x.numerator // x.denominator) - Fraction(1, 2)


def dedekind_direct(a: int, b: int) -> Fraction:
    """Sum over k = 1..b-1 of ((k/b)) ((k a / b))."""
    _check(a, b)
    # ((r/b)) = (2 (r mod b) - b) / (2b) off the integers; with gcd(a, b) = 1 only k = 0 mod b hits them
    total = sum((2 * k - b) * (2 * (k * a % b) - b) for k in range(1, b))
    return Fraction(total, 4 * b * b)


def dedekind_reciprocity_rhs(a: int, b: int) -> Fraction:
    """-1/4 + (a/b + b/a + 1/(ab)) / 12, the value of s(a,b) + s(b,a)."""
    return Fraction(-1, 4) + (Fraction(a, b) + Fraction(b, a) + Fraction(1, a * b)) / 12


def dedekind_fast(a: int, b: int) -> Fraction:
    """O(log b) evaluation by alternating reduction mod b and reciprocity."""
    _check(a, b)
    total = Fraction(0)
    sign = 1
    a %= b
    while True:
        if a == 0:  # only when b == 1
            return total
        if a == 1:
            return total + sign * Fraction((b - 1) * (b - 2), 12 * b)
        # s(a, b) = rhs(a, b) - s(b mod a, a)
        total += sign * dedekind_reciprocity_rhs(a, b)
        sign = -sign
        a, b = b % a, a


def dedekind_root_identity(a: int, b: int) -> Fraction:
    """s(a, b) recovered from the root-of-unity sum

        L = (1/b) sum_{k=1}^{b-1} 1 / ((1 - xi^(k a)) (1 - xi^k)),  xi = exp(2 pi i / b),

    which equals 1/4 - 1/(4b) - s(a, b).  The sum is grouped by the exact
    order d of xi^k and each group is evaluated as a trace in Q(zeta_d).
    """
    _check(a, b)
    if b < 2:
        raise PreconditionError("root-of-unity identity needs b >= 2")
    lhs = Fraction(0)
    for d in divisors(b):
        if d == 1:
            continue
        fld = field(d)
        term = fld.one_minus_zeta_pow_inverse(a) * fld.one_minus_zeta_pow_inverse(1)
        lhs += primitive_trace(term)
    lhs /= b
    return Fraction(1, 4) - Fraction(1, 4 * b) - lhs
