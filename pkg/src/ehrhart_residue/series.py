"""Truncated Laurent series in a local variable ``w`` over an exact ring.

A series knows its coefficients for exponents ``valuation .. order``
(inclusive); everything above ``order`` is unknown, everything below
``valuation`` is zero.  Products and inverses shrink the known window
exactly as far as the algebra forces, so a coefficient read from a result
is always exact.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import NonUnitError, SeriesPrecisionError

__all__ = [
    "TruncatedLaurentSeries",
    "series_arith",
    "series_invert",
    "exp_series",
    "residue_coefficient",
    "ring_inverse",
]


def ring_inverse(c):
    """Inverse of a ring element, or :class:`NonUnitError`."""
    if isinstance(c, (int, Fraction)):
        if c == 0:
            raise NonUnitError("zero is not a unit")
        return 1 / Fraction(c)
    inv = getattr(c, "inverse", None)
    if inv is None:
        raise NonUnitError(f"no inverse available for {type(c).__name__}")
    return inv()


class TruncatedLaurentSeries:
    __slots__ = ("valuation", "coeffs", "order")

    def __init__(self, valuation: int, coeffs, order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = valuation + len(coeffs) - 1
        if order < valuation:
            raise SeriesPrecisionError(f"empty window [{valuation}, {order}]")
        width = order - valuation + 1
        if len(coeffs) < width:
            coeffs.extend([0] * (width - len(coeffs)))
        self.valuation = valuation
        self.coeffs = tuple(coeffs[:width])
        self.order = order

    def __repr__(self) -> str:
        terms = [f"({c})*w^{self.valuation + i}" for i, c in enumerate(self.coeffs) if c != 0]
        return " + ".join(terms or ["0"]) + f" + O(w^{self.order + 1})"

    def __getitem__(self, e: int):
        if e < self.valuation:
            return 0
        if e > self.order:
            raise SeriesPrecisionError(f"coefficient of w^{e} is beyond the known order {self.order}")
        return self.coeffs[e - self.valuation]

    @property
    def precision(self) -> int:
        """Number of known terms past the leading one (relative order)."""
        return self.order - self.valuation

    def shift(self, k: int) -> "TruncatedLaurentSeries":
        """Multiply by w**k."""
        return TruncatedLaurentSeries(self.valuation + k, self.coeffs, self.order + k)

    def strip(self) -> "TruncatedLaurentSeries":
        """Drop known-zero leading coefficients, raising the valuation."""
        i = 0
        while i < len(self.coeffs) - 1 and self.coeffs[i] == 0:
            i += 1
        if i == 0:
            return self
        return TruncatedLaurentSeries(self.valuation + i, self.coeffs[i:], self.order)

    def map_coeffs(self, fn) -> "TruncatedLaurentSeries":
        return TruncatedLaurentSeries(self.valuation, [fn(c) for c in self.coeffs], self.order)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, TruncatedLaurentSeries):
            other = TruncatedLaurentSeries(0, [other], self.order if self.order >= 0 else 0)
        v = min(self.valuation, other.valuation)
        o = min(self.order, other.order)
        if o < v:
            raise SeriesPrecisionError("sum has an empty window")
        return TruncatedLaurentSeries(v, [self[e] + other[e] for e in range(v, o + 1)], o)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedLaurentSeries(self.valuation, [-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedLaurentSeries):
            return TruncatedLaurentSeries(self.valuation, [c * other for c in self.coeffs], self.order)
        va, vb = self.valuation, other.valuation
        v = va + vb
        o = min(self.order + vb, other.order + va)
        if o < v:
            raise SeriesPrecisionError(
                f"product window collapsed: [{v}, {o}] from [{va}, {self.order}] x [{vb}, {other.order}]"
            )
        a, b = self.coeffs, other.coeffs
        out = []
        for e in range(o - v + 1):
            acc = 0
            for i in range(e + 1):
                x = a[i] if i < len(a) else None
                y = b[e - i] if e - i < len(b) else None
                if x is None or y is None:
                    continue
                if x == 0 or y == 0:
                    continue
                acc = acc + x * y
            out.append(acc)
        return TruncatedLaurentSeries(v, out, o)

    def __rmul__(self, other):
        return TruncatedLaurentSeries(self.valuation, [other * c for c in self.coeffs], self.order)

    def __pow__(self, k: int):
        if k < 0:
            return self.invert() ** (-k)
        result = TruncatedLaurentSeries(0, [1], self.precision)
        for _ in range(k):
            result = result * self
        return result

    def invert(self) -> "TruncatedLaurentSeries":
        s = self.strip()
        lead = s.coeffs[0]
        if lead == 0:
            raise NonUnitError("cannot invert a series with no known nonzero coefficient")
        inv0 = ring_inverse(lead)
        n = len(s.coeffs)
        b = [inv0]
        for j in range(1, n):
            acc = 0
            for i in range(1, j + 1):
                if s.coeffs[i] != 0:
                    acc = acc + s.coeffs[i] * b[j - i]
            b.append(-(acc * inv0))
        return TruncatedLaurentSeries(-s.valuation, b, -s.valuation + (n - 1))

    def residue(self):
        """Coefficient of w^-1."""
        if self.order < -1:
            raise SeriesPrecisionError(f"window ends at w^{self.order}; residue unknown")
        return self[-1]


def series_arith(a: TruncatedLaurentSeries, b, op: str = "mul") -> TruncatedLaurentSeries:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown series operation {op!r}")


def series_invert(a: TruncatedLaurentSeries) -> TruncatedLaurentSeries:
    return a.invert()


def exp_series(c, order: int) -> TruncatedLaurentSeries:
    """exp(c*w) known through w**order; ``c`` may be any ring element."""
    if order < 0:
        raise ValueError("exp_series order must be >= 0")
    coeffs = [1]
    power = 1
    for j in range(1, order + 1):
        power = power * c
        coeffs.append(power * Fraction(1, factorial(j)))
    return TruncatedLaurentSeries(0, coeffs, order)


def residue_coefficient(a: TruncatedLaurentSeries):
    return a.residue()
