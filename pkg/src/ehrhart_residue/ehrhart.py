"""Ehrhart polynomials of the simplices conv(0, a_1 e_1, ..., a_n e_n) via residues.

The engine works with the family

    g_k(z) = (z^(s t A) - 1)^k / ((1 - z^A_1) ... (1 - z^A_n) (1 - z) z),   s = +-1,

whose k = 1 members are the generating functions f_{-t} (s = -1) and f_t
(s = +1).  Every finite pole other than 0 is either z = 1 or a root of
unity lam of order d > 1.  Substituting z = lam * e^w turns the residue at
lam into the w^-1 coefficient of

    (e^(s t A w) - 1)^k / prod_j (1 - lam^A_j e^(A_j w)) / (1 - lam e^w),

using lam^(tA) = 1.  Coefficients are polynomials in t over Q(zeta_d); all
primitive d-th roots are handled at once by tracing the result down to Q.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd

import numpy as np

from .algebra import Poly, divisors, lagrange_interpolate, stirling2
from .counting import (
    DEFAULT_MAX_ITERATIONS,
    HPolytopeSpec,
    SimplexSpec,
    count_closed_simplex,
)
from .cyclotomic import CyclotomicElement, field, galois_orbit_sum, primitive_trace
from .dedekind import dedekind_fast
from .errors import BudgetExceeded, IdentityViolation, PreconditionError
from .series import TruncatedLaurentSeries, exp_series

__all__ = [
    "EhrhartPolynomial",
    "ResidueBreakdown",
    "pole_orders",
    "residue_at_one",
    "residue_at_root",
    "residues_at_roots",
    "ehrhart_closed_residue",
    "ehrhart_open_residue",
    "ehrhart_interpolated",
    "g_residue_polynomial",
    "lemma4_residue_at_zero",
    "coefficient_via_g",
    "codim2_constant",
    "codim2_residue_one_coefficient",
    "codim2_root_total",
    "codim2_closed_form",
    "hpolytope_count_series",
]


def _as_spec(s) -> SimplexSpec:
    return s if isinstance(s, SimplexSpec) else SimplexSpec(tuple(s))


def _check_k(s: SimplexSpec, k: int) -> None:
    if not 1 <= k <= s.n:
        raise PreconditionError(f"need 1 <= k <= n = {s.n}, got k = {k}")


def _check_sign(sign: int) -> None:
    if sign not in (1, -1):
        raise PreconditionError(f"sign must be +1 or -1, got {sign}")


# --------------------------------------------------------------------------
# pole structure


def pole_orders(s, k: int) -> dict[int, int]:
    """Pole order of g_k at the primitive d-th roots of unity, for each d > 1.

    The factor 1 - z^A_j vanishes at a primitive d-th root iff d | A_j, and
    the numerator vanishes to order k there, so the pole order is
    #{j : d | A_j} - k.  Only positive orders are reported.
    """
    s = _as_spec(s)
    if k < 0 or k > s.n:
        raise PreconditionError(f"need 0 <= k <= n = {s.n}, got k = {k}")
    out = {}
    A_k = s.A_k
    for d in divisors(s.A):
        if d == 1:
            continue
        order = sum(1 for x in A_k if x % d == 0) - k
        if order >= 1:
            out[d] = order
    return out


# --------------------------------------------------------------------------
# local expansions


def _one_minus_root_exp(d: int, e: int, precision: int) -> TruncatedLaurentSeries:
    """1 - lam^e exp(e w) at a primitive d-th root lam, leading zero stripped.

    The result carries ``precision`` known terms past its leading one.
    """
    ex = exp_series(Fraction(e), precision + 1)
    if d == 1 or e % d == 0:
        # vanishes at w = 0: -(e w + e^2 w^2 / 2 + ...)
        return (1 - ex).strip()
    fld = field(d)
    mu = fld.zeta_pow(e)
    ser = 1 - ex * mu
    return TruncatedLaurentSeries(0, ser.coeffs[: precision + 1], precision)


@lru_cache(maxsize=4096)
def _denominator_inverse(a: tuple[int, ...], d: int, precision: int) -> TruncatedLaurentSeries:
    """1 / [prod_j (1 - lam^A_j e^(A_j w)) (1 - lam e^w)], ``precision`` terms deep."""
    s = SimplexSpec(a)
    result = None
    for e in s.A_k + (1,):
        inv = _one_minus_root_exp(d, e, precision).invert()
        result = inv if result is None else result * inv
    return result


@lru_cache(maxsize=256)
def _numerator(A: int, k: int, sign: int, precision: int) -> TruncatedLaurentSeries:
    """(exp(sign t A w) - 1)^k with Poly-in-t coefficients."""
    c = Poly((0, sign * A))
    base = (exp_series(c, precision + 1) - 1).strip()
    return base**k


def _local_residue(s: SimplexSpec, k: int, sign: int, d: int) -> Poly:
    """w^-1 coefficient of the substituted integrand at a primitive d-th root."""
    vanishing = sum(1 for x in s.A_k if x % d == 0) + (1 if d == 1 else 0)
    pole = vanishing - k
    if pole <= 0:
        return Poly()
    precision = pole + 1
    local = _numerator(s.A, k, sign, precision) * _denominator_inverse(s.a, d, precision)
    res = local.residue()
    if not isinstance(res, Poly):
        res = Poly.constant(res)
    return res


def residue_at_one(s, k: int = 1, sign: int = -1) -> Poly:
    """Res(g_k, z = 1) as a rational polynomial in t (pole order n + 1 - k)."""
    s = _as_spec(s)
    _check_k(s, k)
    _check_sign(sign)
    return _local_residue(s, k, sign, 1).map_coeffs(Fraction)


def residue_at_root(s, k: int, sign: int, d: int) -> Poly:
    """Res(g_k, z = zeta_d) for the root zeta_d = x mod Phi_d, coefficients in Q(zeta_d)."""
    s = _as_spec(s)
    _check_k(s, k)
    _check_sign(sign)
    if d < 2:
        raise PreconditionError("residue_at_root needs d >= 2")
    fld = field(d)
    return _local_residue(s, k, sign, d).map_coeffs(
        lambda c: c if isinstance(c, CyclotomicElement) else fld.constant(c)
    )


def _rational_orbit_sum(c, d: int, check: bool) -> Fraction:
    if not isinstance(c, CyclotomicElement):
        return primitive_trace(c, d)
    tr = primitive_trace(c)
    if check:
        orbit = galois_orbit_sum(c)
        if not orbit.is_rational() or orbit.rational_part() != tr:
            raise AssertionError(
                f"Galois orbit sum in Q(zeta_{d}) is not the rational {tr}: {orbit!r}"
            )
    return tr


def residues_at_roots(s, k: int = 1, sign: int = -1, check_rationality: bool = True) -> dict[int, Poly]:
    """Sum of Res(g_k, lam) over the primitive d-th roots lam, for each pole order d.

    Each returned polynomial has rational coefficients.  With
    ``check_rationality`` the conjugates are also summed explicitly in
    Q(zeta_d) and must collapse to the same rational.
    """
    s = _as_spec(s)
    _check_k(s, k)
    _check_sign(sign)
    out = {}
    for d in pole_orders(s, k):
        local = residue_at_root(s, k, sign, d)
        out[d] = local.map_coeffs(lambda c: _rational_orbit_sum(c, d, check_rationality))
    return out


# --------------------------------------------------------------------------
# Ehrhart polynomials


@dataclass(frozen=True)
class ResidueBreakdown:
    at_one: Poly
    at_roots: dict[int, Poly] = dc_field(default_factory=dict)

    @property
    def total_roots(self) -> Poly:
        return sum(self.at_roots.values(), Poly())


@dataclass(frozen=True)
class EhrhartPolynomial:
    """Closed and open Ehrhart polynomials of one simplex; checked on construction."""

    closed: Poly
    open: Poly
    simplex: SimplexSpec

    def __post_init__(self):
        s = self.simplex
        n = s.n
        for name, poly, c0 in (("closed", self.closed, 1), ("open", self.open, (-1) ** n)):
            if poly.degree != n:
                raise IdentityViolation(f"{name} polynomial of {s.a} has degree {poly.degree}, expected {n}")
            if poly.leading != s.volume:
                raise IdentityViolation(f"{name} leading coefficient {poly.leading} != volume {s.volume}")
            if poly[0] != c0:
                raise IdentityViolation(f"{name} constant term {poly[0]} != {c0}")
        if self.open != self.closed.reflect() * (-1) ** n:
            raise IdentityViolation(f"reciprocity fails for {s.a}: open {self.open!r}, closed {self.closed!r}")

    def __call__(self, t: int) -> Fraction:
        return self.closed(t)


def _ehrhart_from_residues(s: SimplexSpec, sign: int, check: bool) -> tuple[Poly, ResidueBreakdown]:
    at_one = residue_at_one(s, 1, sign)
    roots = residues_at_roots(s, 1, sign, check_rationality=check)
    br = ResidueBreakdown(at_one, roots)
    return 1 - at_one - br.total_roots, br


def ehrhart_open_residue(s, check_rationality: bool = True) -> Poly:
    """Interior count polynomial from f_t (the sign = +1 path), not by reflection."""
    s = _as_spec(s)
    poly, _ = _ehrhart_from_residues(s, 1, check_rationality)
    return poly * (-1) ** s.n


def ehrhart_closed_residue(s, check_rationality: bool = True) -> tuple[EhrhartPolynomial, ResidueBreakdown]:
    """Closure count polynomial 1 - Res(f_-t, 1) - sum of root residues.

    The open polynomial is computed independently from f_t, so the
    reciprocity check inside :class:`EhrhartPolynomial` is a real test.
    """
    s = _as_spec(s)
    closed, br = _ehrhart_from_residues(s, -1, check_rationality)
    opened = ehrhart_open_residue(s, check_rationality)
    return EhrhartPolynomial(closed, opened, s), br


def ehrhart_interpolated(s, max_iterations: int = DEFAULT_MAX_ITERATIONS) -> Poly:
    """Oracle route: interpolate brute-force counts at t = 0..n."""
    s = _as_spec(s)
    return lagrange_interpolate([(t, count_closed_simplex(s, t, max_iterations)) for t in range(s.n + 1)])


# --------------------------------------------------------------------------
# coefficients through g_k


def g_residue_polynomial(s, k: int, check_rationality: bool = True) -> Poly:
    """-1/k! (Res(g_k, 1) + sum of Res(g_k, lam)); equals sum_{m>=k} S(m,k) c_m t^m."""
    s = _as_spec(s)
    total = residue_at_one(s, k, -1) + sum(
        residues_at_roots(s, k, -1, check_rationality).values(), Poly()
    )
    return total * Fraction(-1, factorial(k))


def coefficient_via_g(s, m: int, check_rationality: bool = True) -> Fraction:
    """c_m read off the t^m coefficient of the g_m residue polynomial."""
    s = _as_spec(s)
    _check_k(s, m)
    return Fraction(g_residue_polynomial(s, m, check_rationality)[m])


def lemma4_residue_at_zero(s, k: int, t: int, closed: Poly | None = None,
                           max_iterations: int = DEFAULT_MAX_ITERATIONS) -> Fraction:
    """Res(g_k, z = 0) at a given t, by counts and by Stirling numbers.

    Route (i): sum_{j<k} C(k,j) (-1)^j L((k-j) t) + (-1)^k with L counted by
    enumeration.  Route (ii): k! sum_{m>=k} S(m,k) c_m t^m with c_m from
    ``closed`` (the residue-engine polynomial when omitted).  Returns (i)
    after asserting it equals (ii).
    """
    s = _as_spec(s)
    _check_k(s, k)
    if t < 1:
        raise PreconditionError(f"t must be positive, got {t}")
    by_counts = Fraction(
        sum(comb(k, j) * (-1) ** j * count_closed_simplex(s, (k - j) * t, max_iterations) for j in range(k)) + (-1) ** k
    )
    if closed is None:
        closed = ehrhart_closed_residue(s)[0].closed
    by_stirling = factorial(k) * sum(
        (stirling2(m, k) * closed[m] * t**m for m in range(k, s.n + 1)), Fraction(0)
    )
    if by_counts != by_stirling:
        raise IdentityViolation(
            f"Res(g_{k}, 0) for {s.a} at t={t}: counts give {by_counts}, Stirling form gives {by_stirling}"
        )
    return by_counts


# --------------------------------------------------------------------------
# codimension-two coefficient for pairwise coprime legs


def _check_codim2(s: SimplexSpec) -> None:
    if s.n < 3:
        raise PreconditionError(f"codimension-two formula needs n >= 3, got n = {s.n}")
    if any(x < 2 for x in s.a):
        raise PreconditionError(f"codimension-two formula needs all a_k >= 2, got {s.a}")
    for i in range(s.n):
        for j in range(i + 1, s.n):
            if gcd(s.a[i], s.a[j]) != 1:
                raise PreconditionError(
                    f"codimension-two formula needs pairwise coprime legs; gcd({s.a[i]}, {s.a[j]}) != 1"
                )


def codim2_constant(s) -> Fraction:
    """C_n = (n + sum_{j<k} A_jk) / 4 + (1/A + sum_k A_k / a_k) / 12."""
    s = _as_spec(s)
    pair = sum(s.A_jk(j, k) for j in range(s.n) for k in range(j + 1, s.n))
    recip = Fraction(1, s.A) + sum(Fraction(Ak, ak) for Ak, ak in zip(s.A_k, s.a))
    return Fraction(s.n + pair, 4) + recip / 12


def codim2_residue_one_coefficient(s) -> Fraction:
    """Closed form for the t^(n-2) coefficient of Res(g_{n-2}, z = 1)."""
    s = _as_spec(s)
    pair = sum(s.A_jk(j, k) for j in range(s.n) for k in range(j + 1, s.n))
    recip = Fraction(1, s.A) + sum(Fraction(Ak, ak) for Ak, ak in zip(s.A_k, s.a))
    inv_legs = sum(Fraction(1, x) for x in s.a)
    return -recip / 12 - (inv_legs + pair) / 4


def codim2_root_total(s, index: int) -> Poly:
    """Sum of Res(g_{n-2}, lam) over lam^(a_index) = 1 != lam, in closed form."""
    s = _as_spec(s)
    _check_codim2(s)
    ak, Ak = s.a[index], s.A_k[index]
    value = Fraction(1, 4) - Fraction(1, 4 * ak) - dedekind_fast(Ak, ak)
    return Poly([0] * (s.n - 2) + [-value])


def codim2_closed_form(s) -> Fraction:
    """c_{n-2} = (C_n - sum_k s(A_k, a_k)) / (n-2)!."""
    s = _as_spec(s)
    _check_codim2(s)
    dsum = sum((dedekind_fast(Ak, ak) for Ak, ak in zip(s.A_k, s.a)), Fraction(0))
    return (codim2_constant(s) - dsum) / factorial(s.n - 2)


# --------------------------------------------------------------------------
# general H-polytopes: constant-term extraction


def hpolytope_count_series(h: HPolytopeSpec, t: int, max_cells: int = 50 * DEFAULT_MAX_ITERATIONS) -> int:
    """Lattice points of the t-dilate as one coefficient of a multivariate series.

    The count is the coefficient of z^(tP) in

        prod_k 1 / (1 - z^(C_k)) * prod_j 1 / (1 - z_j),

    C_k being the k-th column of the constraint matrix: each monomial
    z^(M m + r) with m, r >= 0 lands on tP exactly when M m <= tP.  The
    product is expanded on the box [0, tP] by in-place recurrences, which is
    the constant-term reading of the iterated contour integral.
    """
    if t < 0:
        raise PreconditionError(f"dilation t must be >= 0, got {t}")
    rows = h.normalized_rows()
    target = tuple(t * p for _, p in rows)
    shape = tuple(x + 1 for x in target)
    cells = 1
    for x in shape:
        cells *= x
    if cells > max_cells:
        raise BudgetExceeded(f"series table of {cells} cells exceeds {max_cells}")
    q = len(rows)
    c = np.zeros(shape, dtype=np.int64)
    c[(0,) * q] = 1
    for k in range(h.n):
        col = tuple(r[k] for r, _ in rows)
        # multiply by 1/(1 - z^col): c[e] += c[e - col], swept along axis 0
        dst_tail = tuple(slice(v, None) for v in col[1:])
        src_tail = tuple(slice(0, n - v) for v, n in zip(col[1:], shape[1:]))
        if any(v >= n for v, n in zip(col[1:], shape[1:])):
            continue
        for x0 in range(col[0], shape[0]):
            c[(x0,) + dst_tail] += c[(x0 - col[0],) + src_tail]
    for axis in range(q):
        np.cumsum(c, axis=axis, out=c)
    return int(c[target])
