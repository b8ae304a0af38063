import random
from fractions import Fraction
from math import factorial

import pytest

from ehrhart_residue.algebra import Poly
from ehrhart_residue.errors import NonUnitError, SeriesPrecisionError
from ehrhart_residue.series import (
    TruncatedLaurentSeries as TLS,
    exp_series,
    residue_coefficient,
    series_arith,
    series_invert,
)


def test_shifted_product():
    a = TLS(-1, [1, 1], 3)
    b = TLS(1, [1], 4)
    prod = series_arith(a, b, "mul")
    assert prod.valuation == 0
    assert [prod[e] for e in range(0, 3)] == [1, 1, 0]


def test_difference_of_squares():
    prod = TLS(0, [1, 1], 4) * TLS(0, [1, -1], 4)
    assert [prod[e] for e in range(5)] == [1, 0, -1, 0, 0]


def test_exponentials_cancel():
    prod = exp_series(Fraction(2), 3) * exp_series(Fraction(-2), 3)
    assert prod.order == 3
    assert [prod[e] for e in range(4)] == [1, 0, 0, 0]


def test_window_rule_and_collapse():
    a, b = TLS(-2, [1, 2, 3], 1), TLS(1, [5, 6], 3)
    p = a * b
    assert (p.valuation, p.order) == (-1, min(1 + 1, 3 - 2))
    with pytest.raises(SeriesPrecisionError):
        TLS(0, [], -1)


def test_geometric_inverse():
    inv = series_invert(TLS(0, [1, -1], 5))
    assert [inv[e] for e in range(6)] == [1] * 6


def test_inverse_of_one_minus_exp():
    # 1 - e^w = -w - w^2/2 - ...
    one_minus = (1 - exp_series(Fraction(1), 4)).strip()
    inv = series_invert(one_minus)
    assert inv.valuation == -1
    assert [inv[e] for e in (-1, 0, 1, 2)] == [-1, Fraction(1, 2), Fraction(-1, 12), 0]
    assert residue_coefficient(inv) == -1


def test_inverse_by_long_division():
    inv = series_invert(TLS(0, [2, 1], 3))
    assert [inv[e] for e in range(4)] == [Fraction(1, 2), Fraction(-1, 4), Fraction(1, 8), Fraction(-1, 16)]


def test_non_unit_leading_coefficient():
    with pytest.raises(NonUnitError):
        series_invert(TLS(0, [Poly([0, 1]), 1], 2))


def test_exp_series_examples():
    assert [exp_series(0, 3)[e] for e in range(4)] == [1, 0, 0, 0]
    e = exp_series(Poly([0, -30]), 2)
    assert e[1] == Poly([0, -30]) and e[2] == Poly([0, 0, 450])
    assert [exp_series(Fraction(1), 3)[j] for j in range(4)] == [Fraction(1, factorial(j)) for j in range(4)]


def test_residue_rules():
    assert residue_coefficient(TLS(0, [1, 2, 3], 2)) == 0
    t_half = Poly([0, Fraction(-1, 2)])
    assert residue_coefficient(TLS(-1, [t_half, 7], 0)) == t_half
    with pytest.raises(SeriesPrecisionError):
        residue_coefficient(TLS(-4, [1, 1], -3))


def _rand_series(rng, v, n):
    coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(n)]
    if coeffs[0] == 0:
        coeffs[0] = Fraction(1)
    return TLS(v, coeffs)


def test_double_inverse():
    rng = random.Random(1)
    for _ in range(50):
        a = _rand_series(rng, rng.randint(-3, 3), rng.randint(1, 6))
        back = series_invert(series_invert(a))
        assert back.valuation == a.valuation and back.order == a.order
        assert back.coeffs == a.coeffs


def test_residue_linearity():
    rng = random.Random(2)
    for _ in range(50):
        a, b = _rand_series(rng, -2, 4), _rand_series(rng, -3, 5)
        c = Fraction(rng.randint(-5, 5), 3)
        assert residue_coefficient(a * c + b) == c * residue_coefficient(a) + residue_coefficient(b)


def test_exp_pairs_multiply_to_one():
    rng = random.Random(3)
    for _ in range(50):
        c = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
        p = exp_series(c, 6) * exp_series(-c, 6)
        assert [p[e] for e in range(7)] == [1, 0, 0, 0, 0, 0, 0]
