"""End-to-end acceptance checks, one test per criterion.

Run alone with ``pytest tests/test_acceptance.py`` (or ``python
tests/test_acceptance.py``); the session summary prints a PASS/FAIL line
for each criterion.
"""
import io
import itertools
import random
import time
from fractions import Fraction
from math import factorial, gcd
from pathlib import Path

import mpmath
import pytest

from ehrhart_residue import cli
from ehrhart_residue.counting import HPolytopeSpec, SimplexSpec, count_hpolytope, count_open_simplex
from ehrhart_residue.dedekind import (
    dedekind_direct,
    dedekind_fast,
    dedekind_reciprocity_rhs,
    dedekind_root_identity,
)
from ehrhart_residue.ehrhart import (
    codim2_closed_form,
    codim2_constant,
    coefficient_via_g,
    ehrhart_closed_residue,
    ehrhart_interpolated,
    hpolytope_count_series,
    lemma4_residue_at_zero,
    pole_orders,
    residue_at_root,
    residues_at_roots,
)

GOLDEN = Path(__file__).parent / "golden"

FAMILY = [
    a
    for n in range(1, 5)
    for a in itertools.combinations_with_replacement(range(1, 7), n)
    if SimplexSpec(a).A <= 2000
]
COPRIME = [
    a
    for n in (3, 4)
    for a in itertools.combinations((2, 3, 5, 7), n)
    if all(gcd(x, y) == 1 for x, y in itertools.combinations(a, 2))
]
ZERO_RESIDUE_SAMPLE = [(1,), (4,), (2, 2), (2, 3), (1, 5), (2, 3, 5), (2, 2, 4), (1, 2, 3), (3, 3, 3), (2, 3, 4, 5)]


@pytest.fixture(scope="module")
def family_results():
    start = time.perf_counter()
    results = {a: ehrhart_closed_residue(a) for a in FAMILY}
    oracle = {a: ehrhart_interpolated(a) for a in FAMILY}
    return results, oracle, time.perf_counter() - start


@pytest.mark.criterion(1, "residue polynomial equals interpolated counts on n <= 4, a_k <= 6")
def test_oracle_equivalence(family_results):
    results, oracle, elapsed = family_results
    assert len(FAMILY) > 200
    bad = [a for a in FAMILY if results[a][0].closed != oracle[a]]
    assert not bad, bad
    assert elapsed < 60, f"family took {elapsed:.1f}s"


@pytest.mark.criterion(2, "open polynomial from the independent path obeys reciprocity and counts interiors")
def test_reciprocity(family_results):
    results, _, _ = family_results
    for a in FAMILY:
        ep = results[a][0]
        assert ep.open == ep.closed.reflect() * (-1) ** len(a)
        s = SimplexSpec(a)
        for t in (1, 2, 3):
            assert ep.open(t) == count_open_simplex(s, t), (a, t)


@pytest.mark.criterion(3, "worked simplex (2,3,5) agrees across interpolation, g_k residues and the Dedekind formula")
def test_worked_example():
    a = (2, 3, 5)
    closed = ehrhart_closed_residue(a)[0].closed
    assert [closed[m] for m in range(4)] == [1, 4, 8, 5]
    assert ehrhart_interpolated(a) == closed
    assert codim2_constant(a) == Fraction(383, 90)
    assert (dedekind_fast(15, 2), dedekind_fast(10, 3), dedekind_fast(6, 5)) == (0, Fraction(1, 18), Fraction(1, 5))
    assert codim2_closed_form(a) == coefficient_via_g(a, 1) == closed[1] == 4


@pytest.mark.criterion(4, "codimension-two closed form on pairwise coprime legs from {2,3,5,7}")
def test_codim2_family():
    start = time.perf_counter()
    assert len(COPRIME) == 5
    for a in COPRIME:
        n = len(a)
        assert codim2_closed_form(a) == ehrhart_interpolated(a)[n - 2], a
    assert time.perf_counter() - start < 30


@pytest.mark.criterion(5, "Res(g_k, 0) by counts equals the Stirling form; c_m recovered from g_m")
def test_residue_at_zero_sample():
    for a in ZERO_RESIDUE_SAMPLE:
        closed = ehrhart_closed_residue(a)[0].closed
        n = len(a)
        for k in range(1, n + 1):
            for t in (1, 2, 3):
                lemma4_residue_at_zero(a, k, t, closed)  # raises on disagreement
        for m in range(1, n + 1):
            assert coefficient_via_g(a, m) == closed[m], (a, m)


@pytest.mark.criterion(6, "Dedekind sums: fast vs direct, reciprocity, root identity, sub-millisecond at b ~ 1e6")
def test_dedekind_suite():
    rng = random.Random(2024)

    def pairs(count, lo, hi):
        out = []
        while len(out) < count:
            b = rng.randint(lo, hi)
            a = rng.randint(1, 3 * b)
            if gcd(a, b) == 1:
                out.append((a, b))
        return out

    for a, b in pairs(500, 1, 10**4):
        assert dedekind_fast(a, b) == dedekind_direct(a, b)
    for a, b in pairs(1000, 1, 10**4):
        assert dedekind_direct(a, b) + dedekind_direct(b, a) == dedekind_reciprocity_rhs(a, b)
    for b in range(2, 31):
        for a in range(b):
            if gcd(a, b) == 1:
                assert dedekind_root_identity(a, b) == dedekind_direct(a, b)
    for a, b in pairs(50, 10**6 - 1000, 10**6):
        best = float("inf")
        for _ in range(5):
            start = time.perf_counter()
            value = dedekind_fast(a, b)
            best = min(best, time.perf_counter() - start)
        assert best < 1e-3, (a, b, best)
        assert value + dedekind_fast(b, a) == dedekind_reciprocity_rhs(a, b)


@pytest.mark.criterion(7, "series extraction equals enumeration on small H-polytopes")
def test_hpolytope_series():
    rng = random.Random(7)
    seen = set()
    while len(seen) < 15:
        n, q = rng.randint(1, 3), rng.randint(1, 3)
        seen.add(tuple(tuple(rng.randint(1, 4) for _ in range(n)) for _ in range(q)))
    seen.add(((2, 1), (1, 2)))
    for rows in sorted(seen):
        h = HPolytopeSpec(rows)
        for t in (1, 2, 3):
            assert hpolytope_count_series(h, t) == count_hpolytope(h, t), (rows, t)


def _numeric_residue(a, t, lam, h):
    s = SimplexSpec(a)
    z = lam + h
    den = (1 - z) * z
    for Ak in s.A_k:
        den *= 1 - z**Ak
    return h * (z ** (-t * s.A) - 1) / den


@pytest.mark.criterion(8, "root residues are rational; simple poles match high-precision limits")
def test_rationality_and_float_check():
    checked = 0
    cases = [(a, 1) for a in FAMILY]
    cases += [(a, k) for a in ZERO_RESIDUE_SAMPLE for k in range(1, len(a) + 1)]
    cases += [(a, len(a) - 2) for a in COPRIME]
    for a, k in cases:
        # the explicit conjugate sum inside residues_at_roots asserts rationality
        for poly in residues_at_roots(a, k, check_rationality=True).values():
            assert all(isinstance(c, Fraction) for c in poly.coeffs)
            checked += 1
    assert checked > 100
    simple = 0
    with mpmath.workdps(60):
        h = mpmath.mpf(10) ** -25
        for a in FAMILY:
            if len(a) > 3:
                continue
            for d, order in pole_orders(a, 1).items():
                if order != 1:
                    continue
                exact = residue_at_root(a, 1, -1, d)
                zeta = mpmath.exp(2j * mpmath.pi / d)
                for t in (1, 2):
                    value = sum(
                        sum(mpmath.mpf(x.numerator) / x.denominator * zeta**i for i, x in enumerate(c.coefficients)) * t**j
                        for j, c in enumerate(exact.coeffs)
                    )
                    numeric = _numeric_residue(a, t, zeta, h)
                    assert abs(numeric - value) <= 1e-9 * max(abs(value), 1e-12), (a, d, t)
                    simple += 1
    assert simple > 50


@pytest.mark.criterion(9, "degree n, constant term 1 and leading coefficient A/n! everywhere")
def test_structural_invariants(family_results):
    results, _, _ = family_results
    for a in FAMILY:
        ep = results[a][0]
        s = SimplexSpec(a)
        n = len(a)
        assert ep.closed.degree == ep.open.degree == n
        assert ep.closed[0] == 1 and ep.open[0] == (-1) ** n
        assert ep.closed.leading == ep.open.leading == Fraction(s.A, factorial(n))


@pytest.mark.criterion(10, "CLI output matches the golden files byte for byte")
def test_cli_golden():
    for argv, name in [
        (["ehrhart", "--legs", "2,3", "--json"], "ehrhart_2_3.json"),
        (["dedekind", "--a", "1", "--b", "3"], "dedekind_1_3.txt"),
        (["verify", "--suite", "reciprocity", "--max-n", "3", "--max-a", "5"], "verify_reciprocity.txt"),
    ]:
        for _ in range(2):
            out = io.StringIO()
            assert cli.run(argv, out) == 0
            assert out.getvalue() == (GOLDEN / name).read_text()


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
