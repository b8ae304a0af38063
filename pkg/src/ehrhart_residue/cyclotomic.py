"""Exact arithmetic in cyclotomic fields Q(zeta_d) = Q[x] / Phi_d(x).

Elements are stored as integer numerators over one positive common
denominator, reduced modulo the monic integer polynomial Phi_d after every
multiplication.  Since Phi_d is monic, reduction never introduces new
denominators.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .algebra import Poly, divisors, ramanujan_sum, totient
from .errors import NonUnitError

__all__ = [
    "cyclotomic_poly",
    "CyclotomicField",
    "CyclotomicElement",
    "field",
    "zeta_pow",
    "cyclo_arith",
    "primitive_trace",
    "galois_orbit_sum",
]


def _int_divexact_monic(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Exact quotient of integer polynomials; ``den`` is monic."""
    num = list(num)
    dd = len(den) - 1
    q = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            q[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    if any(num[:dd]):
        raise ArithmeticError("inexact cyclotomic division")
    return q


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(d: int) -> tuple[int, ...]:
    if d < 1:
        raise ValueError(f"cyclotomic order must be >= 1, got {d}")
    num = [-1] + [0] * (d - 1) + [1]
    for e in divisors(d):
        if e < d:
            num = _int_divexact_monic(num, _cyclotomic_coeffs(e))
    return tuple(num)


def cyclotomic_poly(d: int) -> Poly:
    """Phi_d as a :class:`Poly` with int coefficients (ascending)."""
    return Poly(_cyclotomic_coeffs(d))


def _reduce(vec: list[int], modulus: tuple[int, ...]) -> list[int]:
    """Reduce an integer coefficient vector modulo a monic polynomial, in place."""
    deg = len(modulus) - 1
    for i in range(len(vec) - 1, deg - 1, -1):
        c = vec[i]
        if c:
            base = i - deg
            for j in range(deg):
                mj = modulus[j]
                if mj:
                    vec[base + j] -= c * mj
            vec[i] = 0
    del vec[deg:]
    if len(vec) < deg:
        vec.extend([0] * (deg - len(vec)))
    return vec


class CyclotomicField:
    """Q(zeta_d).  Obtain instances through :func:`field` so they are shared."""

    def __init__(self, d: int):
        self.order = d
        self.modulus = _cyclotomic_coeffs(d)
        self.degree = len(self.modulus) - 1
        self._powers: dict[int, CyclotomicElement] = {}
        self._inverses: dict[int, CyclotomicElement] = {}

    def __repr__(self) -> str:
        return f"CyclotomicField({self.order})"

    def element(self, coeffs) -> "CyclotomicElement":
        """Element sum c_i zeta^i; ``coeffs`` may have any length (reduced here)."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = [int(c * den) for c in fr]
        if len(nums) > self.degree:
            _reduce(nums, self.modulus)
        return CyclotomicElement(self, nums, den)

    def constant(self, c) -> "CyclotomicElement":
        c = Fraction(c)
        return CyclotomicElement(self, [c.numerator], c.denominator)

    @property
    def one(self) -> "CyclotomicElement":
        return self.constant(1)

    @property
    def zero(self) -> "CyclotomicElement":
        return self.constant(0)

    def zeta(self) -> "CyclotomicElement":
        return self.zeta_pow(1)

    def zeta_pow(self, e: int) -> "CyclotomicElement":
        e %= self.order
        cached = self._powers.get(e)
        if cached is None:
            vec = [0] * e + [1]
            cached = CyclotomicElement(self, _reduce(vec, self.modulus), 1)
            self._powers[e] = cached
        return cached

    def one_minus_zeta_pow_inverse(self, e: int) -> "CyclotomicElement":
        """Cached ``1 / (1 - zeta^e)``; the residue engine asks for these repeatedly."""
        e %= self.order
        cached = self._inverses.get(e)
        if cached is None:
            cached = (self.one - self.zeta_pow(e)).inverse()
            self._inverses[e] = cached
        return cached


@lru_cache(maxsize=None)
def field(d: int) -> CyclotomicField:
    return CyclotomicField(d)


def zeta_pow(fld: CyclotomicField, e: int) -> "CyclotomicElement":
    return fld.zeta_pow(e)


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list, list]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    r = a[: len(b) - 1]
    while r and r[-1] == 0:
        r.pop()
    return q, r


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


class CyclotomicElement:
    """Immutable element of Q(zeta_d): (nums[0] + nums[1] zeta + ...) / den."""

    __slots__ = ("field", "nums", "den")

    def __init__(self, fld: CyclotomicField, nums, den: int = 1):
        nums = list(nums)
        if len(nums) < fld.degree:
            nums.extend([0] * (fld.degree - len(nums)))
        if den < 0:
            nums = [-x for x in nums]
            den = -den
        g = gcd(den, *nums)
        if g > 1:
            nums = [x // g for x in nums]
            den //= g
        self.field = fld
        self.nums = tuple(nums)
        self.den = den

    # -- views -----------------------------------------------------------

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.nums)

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def rational_part(self) -> Fraction:
        return Fraction(self.nums[0], self.den)

    def __repr__(self) -> str:
        terms = [f"({c})*z^{i}" for i, c in enumerate(self.coefficients) if c]
        return f"<Q(zeta_{self.field.order}): {' + '.join(terms) or '0'}>"

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CyclotomicElement):
            if other.field is not self.field:
                if other.field.order != self.field.order:
                    raise ValueError("elements of different cyclotomic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        den = self.den * o.den // gcd(self.den, o.den)
        fa, fb = den // self.den, den // o.den
        return CyclotomicElement(self.field, [x * fa + y * fb for x, y in zip(self.nums, o.nums)], den)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement(self.field, [-x for x in self.nums], self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return CyclotomicElement(self.field, [x * other.numerator for x in self.nums], self.den * other.denominator)
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        if other.field.order != self.field.order:
            raise ValueError("elements of different cyclotomic fields")
        a, b = self.nums, other.nums
        out = [0] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return CyclotomicElement(self.field, _reduce(out, self.field.modulus), self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicElement":
        """Inverse via the extended Euclidean algorithm against Phi_d."""
        if self.is_zero():
            raise NonUnitError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return self.field.constant(Fraction(self.den, self.nums[0]))
        a = [Fraction(x) for x in self.nums]
        while a and a[-1] == 0:
            a.pop()
        # invariant: s_i * a == r_i (mod Phi_d)
        r0, r1 = [Fraction(c) for c in self.field.modulus], a
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r1 is a nonzero constant since Phi_d is irreducible
        c = r1[0]
        return self.field.element([x / c for x in s1]) * Fraction(self.den)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if isinstance(other, CyclotomicElement):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, CyclotomicElement):
            return other.field.order == self.field.order and self.nums == other.nums and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.nums[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field.order, self.nums, self.den))


def cyclo_arith(a: CyclotomicElement, b: CyclotomicElement | None, op: str) -> CyclotomicElement:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown cyclotomic operation {op!r}")


def primitive_trace(a, d: int | None = None) -> Fraction:
    """Sum of ``a`` evaluated at every primitive d-th root of unity.

    Uses the Ramanujan sums c_d(i) on the power-basis coefficients.  Plain
    rationals are accepted when ``d`` is given (each of the phi(d) conjugates
    equals the rational itself).
    """
    if isinstance(a, CyclotomicElement):
        d = a.field.order
        total = sum(x * ramanujan_sum(d, i) for i, x in enumerate(a.nums) if x)
        return Fraction(total, a.den)
    if d is None:
        raise ValueError("primitive_trace of a rational needs the field order d")
    return Fraction(a) * totient(d)


def galois_orbit_sum(a: CyclotomicElement) -> CyclotomicElement:
    """Sum of all Galois conjugates sigma_k(a), k coprime to d, as a field element.

    Computed from the conjugates themselves (zeta -> zeta^k), independently
    of the Ramanujan-sum shortcut in :func:`primitive_trace`.
    """
    fld = a.field
    d = fld.order
    acc = [0] * d
    ks = [k for k in range(1, d + 1) if gcd(k, d) == 1]
    for i, x in enumerate(a.nums):
        if x:
            for k in ks:
                acc[(i * k) % d] += x
    return CyclotomicElement(fld, _reduce(acc, fld.modulus), a.den)
