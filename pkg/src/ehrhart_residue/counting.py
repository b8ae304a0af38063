"""Brute-force lattice-point oracles.

These never touch generating functions or residues; they are the ground
truth the residue engine is tested against.  The inner loops live in
``_kernels`` (compiled, when the extension was built) with a pure-Python
twin in ``_kernels_py``.  Set ``EHRHART_RESIDUE_PURE_PYTHON=1`` to force the
fallback at import time.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd, prod

from . import _kernels_py
from .errors import BudgetExceeded, PreconditionError

try:
    if os.environ.get("EHRHART_RESIDUE_PURE_PYTHON"):
        raise ImportError("pure-Python kernels forced by environment")
    from . import _kernels as _native
except ImportError:
    _native = None

BACKEND = "cython" if _native is not None else "python"
DEFAULT_MAX_ITERATIONS = 10**6

# native kernels use signed 64-bit arithmetic
_I64_SAFE = 1 << 62

__all__ = [
    "BACKEND",
    "DEFAULT_MAX_ITERATIONS",
    "SimplexSpec",
    "HPolytopeSpec",
    "count_closed_simplex",
    "count_open_simplex",
    "count_denumerant",
    "count_hpolytope",
]


@dataclass(frozen=True)
class SimplexSpec:
    """Simplex with vertices at the origin and a_k on the k-th axis."""

    a: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        object.__setattr__(self, "a", a)
        if not a:
            raise PreconditionError("simplex needs n >= 1 legs")
        if any(x < 1 for x in a):
            raise PreconditionError(f"all legs must be positive integers, got {a}")

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def A(self) -> int:
        return prod(self.a)

    @property
    def A_k(self) -> tuple[int, ...]:
        A = self.A
        return tuple(A // x for x in self.a)

    def A_jk(self, j: int, k: int) -> int:
        """Product of all legs except the j-th and k-th (0-based, j != k)."""
        return self.A // (self.a[j] * self.a[k])

    @property
    def volume(self) -> Fraction:
        return Fraction(self.A, factorial(self.n))


@dataclass(frozen=True)
class HPolytopeSpec:
    """{x >= 0 : sum_k x_k / a[j][k] <= t for every row j}, all a[j][k] >= 1."""

    a: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.a)
        object.__setattr__(self, "a", rows)
        if not rows:
            raise PreconditionError("H-polytope needs q >= 1 constraint rows")
        n = len(rows[0])
        if n < 1 or any(len(r) != n for r in rows):
            raise PreconditionError("all constraint rows must have the same length n >= 1")
        if any(x < 1 for r in rows for x in r):
            raise PreconditionError("constraint entries a_jk must be positive integers")

    @property
    def n(self) -> int:
        return len(self.a[0])

    @property
    def q(self) -> int:
        return len(self.a)

    @property
    def P(self) -> tuple[int, ...]:
        return tuple(prod(r) for r in self.a)

    @property
    def M(self) -> tuple[tuple[int, ...], ...]:
        """Integer constraint matrix: row j is R_j with entries P_j / a_jk."""
        return tuple(tuple(p // x for x in r) for r, p in zip(self.a, self.P))

    def normalized_rows(self) -> tuple[tuple[tuple[int, ...], int], ...]:
        """(R_j, P_j) with each inequality divided by its content."""
        out = []
        for r, p in zip(self.M, self.P):
            g = gcd(p, *r)
            out.append((tuple(x // g for x in r), p // g))
        return tuple(out)

    def box(self, t: int) -> tuple[int, ...]:
        """Per-coordinate upper bounds: x_k <= min_j floor(t P_j / A_jk)."""
        rows = self.normalized_rows()
        return tuple(min((t * p) // r[k] for r, p in rows) for k in range(self.n))

    def padded(self, P0: int | None = None) -> "HPolytopeSpec":
        """Add the redundant row x_1 + ... + x_n <= t*P0 (default P0 = n * max_j P_j)."""
        if P0 is None:
            P0 = self.n * max(self.P)
        return HPolytopeSpec(self.a + ((P0,) * self.n,))


def _kernel(name: str, backend: str | None, fits_i64: bool):
    if backend is None:
        backend = BACKEND
    if backend == "cython":
        if _native is None:
            raise RuntimeError("compiled kernels are not available")
        if fits_i64:
            return getattr(_native, name)
    elif backend != "python":
        raise ValueError(f"unknown backend {backend!r}")
    return getattr(_kernels_py, name)


def _check_t(t: int) -> int:
    if t < 0:
        raise PreconditionError(f"dilation t must be >= 0, got {t}")
    return int(t)


def _weighted(s: SimplexSpec, cap: int, lower: int, max_iterations: int, backend) -> int:
    fits = cap < _I64_SAFE and max(s.A_k) < _I64_SAFE
    count, iters = _kernel("count_weighted", backend, fits)(list(s.A_k), cap, lower, max_iterations)
    if count < 0:
        raise BudgetExceeded(f"enumeration of {s.a} exceeded {max_iterations} iterations")
    return count


def count_closed_simplex(s: SimplexSpec, t: int, max_iterations: int = DEFAULT_MAX_ITERATIONS,
                         backend: str | None = None) -> int:
    """#{m >= 0 : sum m_k A_k <= t A}."""
    t = _check_t(t)
    return _weighted(s, t * s.A, 0, max_iterations, backend)


def count_open_simplex(s: SimplexSpec, t: int, max_iterations: int = DEFAULT_MAX_ITERATIONS,
                       backend: str | None = None) -> int:
    """#{m >= 1 : sum m_k A_k < t A}."""
    t = _check_t(t)
    return _weighted(s, t * s.A - 1, 1, max_iterations, backend)


def count_denumerant(s: SimplexSpec, t: int, max_iterations: int = 10 * DEFAULT_MAX_ITERATIONS,
                     backend: str | None = None) -> int:
    """Nonnegative solutions (m_1..m_n, m) of sum m_k A_k + m = t A."""
    t = _check_t(t)
    target = t * s.A
    fits = comb(target + s.n, s.n) < _I64_SAFE
    count, _ = _kernel("count_denumerant", backend, fits)(list(s.A_k), target, max_iterations)
    if count < 0:
        raise BudgetExceeded(f"denumerant table for {s.a} at t={t} exceeds {max_iterations} cells")
    return count


def count_hpolytope(h: HPolytopeSpec, t: int, max_iterations: int = DEFAULT_MAX_ITERATIONS,
                    backend: str | None = None) -> int:
    """Lattice points of the t-dilate, by enumerating the bounding box and filtering."""
    t = _check_t(t)
    rows = h.normalized_rows()
    bounds = h.box(t)
    mat = [list(r) for r, _ in rows]
    rhs = [t * p for _, p in rows]
    fits = max(rhs) < _I64_SAFE // max(1, h.n) and max(max(r) for r in mat) * max(bounds + (1,)) < _I64_SAFE // max(1, h.n)
    count, _ = _kernel("count_box", backend, fits)(mat, rhs, list(bounds), max_iterations)
    if count < 0:
        raise BudgetExceeded(f"bounding box of {h.a} at t={t} exceeds {max_iterations} points")
    return count
