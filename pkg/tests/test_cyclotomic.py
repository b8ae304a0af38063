import random
from fractions import Fraction

import pytest

from ehrhart_residue.algebra import Poly, divisors, ramanujan_sum, totient
from ehrhart_residue.cyclotomic import (
    cyclo_arith,
    cyclotomic_poly,
    field,
    galois_orbit_sum,
    primitive_trace,
    zeta_pow,
)
from ehrhart_residue.errors import NonUnitError


def test_small_cyclotomic_polys():
    assert cyclotomic_poly(1) == Poly([-1, 1])
    assert cyclotomic_poly(4) == Poly([1, 0, 1])
    assert cyclotomic_poly(6) == Poly([1, -1, 1])


@pytest.mark.parametrize("d", range(1, 21))
def test_product_over_divisors(d):
    prod = Poly([1])
    for e in divisors(d):
        prod = prod * cyclotomic_poly(e)
    assert prod == Poly([-1] + [0] * (d - 1) + [1])
    assert cyclotomic_poly(d).degree == totient(d)


def test_arith_examples():
    f4 = field(4)
    z = f4.zeta()
    assert cyclo_arith(z, z, "mul") == -1
    f3 = field(3)
    z3 = f3.zeta()
    inv = cyclo_arith(1 - z3, None, "inv")
    assert inv == (2 + z3) / 3
    f5 = field(5)
    assert f5.zeta() * zeta_pow(f5, 4) == 1


def test_inverse_of_zero():
    with pytest.raises(NonUnitError):
        field(5).zero.inverse()


@pytest.mark.parametrize("d", range(2, 13))
def test_random_inverses(d):
    rng = random.Random(d)
    fld = field(d)
    for _ in range(200):
        el = fld.element([Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(fld.degree)])
        if el.is_zero():
            continue
        assert el * el.inverse() == 1


def test_zeta_pow_examples():
    assert zeta_pow(field(7), 14) == 1
    assert zeta_pow(field(3), 2) == field(3).element([-1, -1])
    assert zeta_pow(field(2), 7) == -1


def test_trace_examples():
    assert primitive_trace(field(1).constant(Fraction(3, 7))) == Fraction(3, 7)
    assert primitive_trace(field(3).zeta()) == -1
    assert primitive_trace(field(4).zeta()) == 0


@pytest.mark.parametrize("d", range(1, 21))
def test_trace_of_powers(d):
    fld = field(d)
    assert primitive_trace(fld.one) == totient(d)
    for i in range(d):
        assert primitive_trace(fld.zeta_pow(i)) == ramanujan_sum(d, i)


def test_trace_is_linear():
    rng = random.Random(0)
    for d in (5, 8, 9, 12):
        fld = field(d)
        for _ in range(20):
            a = fld.element([rng.randint(-5, 5) for _ in range(fld.degree)])
            b = fld.element([Fraction(rng.randint(-5, 5), 3) for _ in range(fld.degree)])
            al, be = Fraction(rng.randint(-4, 4), 7), Fraction(rng.randint(-4, 4), 5)
            assert primitive_trace(a * al + b * be) == al * primitive_trace(a) + be * primitive_trace(b)


@pytest.mark.parametrize("d", [3, 6, 10, 12, 15, 18])
def test_orbit_sum_agrees_with_trace(d):
    rng = random.Random(d)
    fld = field(d)
    for _ in range(20):
        a = fld.element([Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(fld.degree)])
        orbit = galois_orbit_sum(a)
        assert orbit.is_rational()
        assert orbit.rational_part() == primitive_trace(a)


def test_mixed_scalar_arithmetic():
    fld = field(5)
    z = fld.zeta()
    assert Fraction(1, 2) * z * 2 == z
    assert (z + 1) - 1 == z
    assert 1 - z == -(z - 1)
    assert (z / z) == 1


@pytest.mark.parametrize("d", range(1, 21))
def test_ramanujan_sum_is_literal_orbit_sum(d):
    fld = field(d)
    for i in range(d):
        orbit = galois_orbit_sum(fld.zeta_pow(i))
        assert orbit.is_rational() and orbit.rational_part() == ramanujan_sum(d, i)
