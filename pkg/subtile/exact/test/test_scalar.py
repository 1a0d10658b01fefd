from fractions import Fraction

import pytest
from numpy.random import RandomState
from numpy.testing import assert_allclose, assert_equal

from subtile._errors import FieldMismatchError, InvalidGeometryError
from subtile.exact import (
    NumberField,
    penrose_field,
    quadratic_field,
    rationals,
    scalar_arith,
    scalar_sign,
)


def _random_scalar(field, random):
    coeffs = [
        Fraction(int(random.randint(-9, 10)), int(random.randint(1, 6)))
        for _ in range(field.degree)
    ]
    return field.scalar(coeffs)


def test_quadratic_identities():
    F = quadratic_field(5)
    r5 = F.gen
    tau = (1 + r5) / 2

    assert_equal(scalar_arith(r5, r5, "mul") == 5, True)
    assert_equal(tau * tau == tau + 1, True)
    assert_equal(1 / tau == tau - 1, True)
    assert_allclose(float(tau), (1 + 5 ** 0.5) / 2)


def test_rational_hash_matches_numbers():
    F = quadratic_field(5)
    r5 = F.gen
    five = r5 * r5
    assert_equal(five == 5, True)
    assert_equal(hash(five), hash(5))
    half = F.scalar("1/2")
    assert_equal(hash(half), hash(Fraction(1, 2)))
    assert_equal({5: "a"}[five], "a")
    assert_equal(len({five, 5, Fraction(5)}), 1)
    assert_equal(len({r5, r5 * 1}), 1)


def test_sign():
    F = quadratic_field(5)
    r5 = F.gen
    tau = (1 + r5) / 2

    assert_equal(scalar_sign(F.zero), 0)
    assert_equal(scalar_sign(2 - r5), -1)
    assert_equal(scalar_sign(tau - 1), 1)


def test_sign_near_zero():
    F = quadratic_field(2)
    r2 = F.gen
    # 665857/470832 is a continued-fraction convergent of sqrt(2)
    a = r2 - Fraction(665857, 470832)
    assert_equal(scalar_sign(a), -1)
    assert_equal(scalar_sign(-a), 1)


def test_field_axioms():
    random = RandomState(0)
    for F in [quadratic_field(5), penrose_field(), rationals()]:
        for _ in range(20):
            a, b, c = (_random_scalar(F, random) for _ in range(3))
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert (a + b) - b == a
            if not a.is_zero():
                assert a * a.inverse() == F.one
                assert (b / a) * a == b
            assert scalar_sign(a - b) == -scalar_sign(b - a)


def test_penrose_field_values():
    F = penrose_field()
    w = F.gen
    sqrt5 = (10 - w * w) / 2

    assert sqrt5 * sqrt5 == 5
    assert_allclose(float(w), 2.3511410091698925)
    assert_allclose(float(sqrt5), 5 ** 0.5)


def test_errors():
    F = quadratic_field(5)
    G = quadratic_field(2)

    with pytest.raises(FieldMismatchError):
        F.gen + G.gen

    with pytest.raises(ZeroDivisionError):
        F.gen / F.zero

    with pytest.raises(InvalidGeometryError):
        NumberField((-4, 0, 1), (1, 3))

    with pytest.raises(InvalidGeometryError):
        NumberField((-5, 0, 1), (-3, 3))
