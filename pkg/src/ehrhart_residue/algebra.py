"""Exact polynomial arithmetic and small number-theoretic utilities.

Rationals are :class:`fractions.Fraction` throughout.  :class:`Poly` is a dense
univariate polynomial (ascending coefficients) over any exact commutative
ring whose elements support ``+``, ``-``, ``*`` and ``== 0``: Fractions,
ints, :class:`~ehrhart_residue.cyclotomic.CyclotomicElement`, or even other
``Poly`` instances.  In this package the indeterminate is always the
dilation parameter ``t``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd
from typing import Iterable, Sequence

from .errors import NonUnitError, PreconditionError

__all__ = [
    "Poly",
    "T",
    "poly_arith",
    "lagrange_interpolate",
    "stirling2",
    "stirling2_explicit",
    "factorize",
    "mobius",
    "totient",
    "divisors",
    "number_theory",
    "ramanujan_sum",
]


class Poly:
    """Dense polynomial in ``t``; ``coeffs[i]`` multiplies ``t**i``.

    Trailing zeros are stripped on construction, so the zero polynomial has
    ``coeffs == ()`` and ``degree == -1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return Poly.constant(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Poly(out)

    def __rmul__(self, other):
        # scalar on the left; coefficient rings here are commutative
        return Poly(other * c for c in self.coeffs)

    def __truediv__(self, scalar):
        if isinstance(scalar, int):
            scalar = Fraction(scalar)
        return Poly(c / scalar for c in self.coeffs)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly.constant(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly.constant(other)
            except TypeError:
                return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(x == y for x, y in zip(self.coeffs, other.coeffs))

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None  # mutable-looking value semantics; not hashable

    def __call__(self, x):
        """Evaluate by Horner's rule."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def scale(self, c) -> "Poly":
        return self * c

    def reflect(self) -> "Poly":
        """Return ``p(-t)``."""
        return Poly(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def map_coeffs(self, fn) -> "Poly":
        return Poly(fn(c) for c in self.coeffs)

    def inverse(self) -> "Poly":
        if self.degree != 0:
            raise NonUnitError(f"polynomial {self!r} is not a unit")
        c = self.coeffs[0]
        if isinstance(c, int):
            c = Fraction(c)
        return Poly.constant(1 / c)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                terms.append(f"{c}")
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"({c})*{mono}")
        return " + ".join(terms)


T = Poly((0, 1))


def poly_arith(p, q=None, op: str = "add"):
    """Functional front end over the operator overloads of :class:`Poly`.

    ``op`` is one of ``add``, ``sub``, ``mul``, ``eval`` (``q`` is the point)
    and ``scale`` (``q`` is the scalar).
    """
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "eval":
        return p(q)
    if op == "scale":
        return p.scale(q)
    raise ValueError(f"unknown polynomial operation {op!r}")


def lagrange_interpolate(points: Sequence[tuple]) -> Poly:
    """Unique polynomial of degree < len(points) through the given points."""
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    if not pts:
        raise PreconditionError("interpolation needs at least one point")
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise PreconditionError("interpolation abscissae must be pairwise distinct")
    result = Poly()
    for i, (xi, yi) in enumerate(pts):
        basis = Poly.constant(Fraction(1))
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Poly((-xj, Fraction(1)))
                denom *= xi - xj
        result = result + basis * (yi / denom)
    return result


@lru_cache(maxsize=None)
def stirling2(m: int, k: int) -> int:
    """Stirling number of the second kind via S(m,k) = k S(m-1,k) + S(m-1,k-1)."""
    if m < 0 or k < 0:
        raise PreconditionError("stirling2 needs m, k >= 0")
    if m == k:
        return 1
    if k == 0 or k > m:
        return 0
    return k * stirling2(m - 1, k) + stirling2(m - 1, k - 1)


def stirling2_explicit(m: int, k: int) -> int:
    """S(m,k) from the alternating sum over j of C(k,j) (-1)^(k-j) j^m, divided by k!."""
    total = sum(comb(k, j) * (-1) ** (k - j) * j**m for j in range(k + 1))
    q, r = divmod(total, factorial(k))
    assert r == 0
    return q


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization by trial division, as ((p, e), ...) ascending."""
    if n < 1:
        raise PreconditionError(f"factorize needs n >= 1, got {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def mobius(n: int) -> int:
    fs = factorize(n)
    if any(e > 1 for _, e in fs):
        return 0
    return -1 if len(fs) % 2 else 1


def totient(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


@lru_cache(maxsize=4096)
def divisors(n: int) -> tuple[int, ...]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return tuple(sorted(divs))


def number_theory(n: int, which: str):
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    if which == "mobius":
        return mobius(n)
    if which == "totient":
        return totient(n)
    if which == "divisors":
        return list(divisors(n))
    raise ValueError(f"unknown number-theoretic function {which!r}")


def ramanujan_sum(d: int, i: int) -> int:
    """c_d(i): the sum of zeta_d^(i*k) over 1 <= k <= d with gcd(k, d) = 1."""
    if d < 1:
        raise PreconditionError(f"ramanujan_sum needs d >= 1, got {d}")
    m = d // gcd(i, d)
    return mobius(m) * totient(d) // totient(m)
