"""Tests for the polynomial coefficient ring."""

import random
from fractions import Fraction

import pytest

from riordan import MU, MuPoly


def poly_from(*coeffs):
    return MuPoly(tuple(Fraction(c) for c in coeffs))


def test_construction_strips_trailing_zeros():
    p = poly_from(1, 2, 0, 0)
    assert p.degree == 1
    assert p.dense() == [Fraction(1), Fraction(2)]
    assert poly_from(0, 0, 0).is_zero()
    assert poly_from(0).degree == -1


def test_constants():
    c = MuPoly.const(Fraction(3, 4))
    assert c.is_constant()
    assert c.constant_value() == Fraction(3, 4)
    assert MU.degree == 1
    assert not MU.is_constant()


def test_equality_against_scalars():
    assert MuPoly.const(5) == 5
    assert MuPoly.const(Fraction(1, 2)) == Fraction(1, 2)
    assert poly_from(0, 1) != 1
    assert hash(MuPoly.const(7)) == hash(Fraction(7))


def test_arithmetic_matches_integer_evaluation():
    rng = random.Random(20240817)
    for _ in range(120):
        a = MuPoly(tuple(Fraction(rng.randint(-4, 4)) for _ in range(rng.randint(1, 5))))
        b = MuPoly(tuple(Fraction(rng.randint(-4, 4)) for _ in range(rng.randint(1, 5))))
        for t in range(-3, 4):
            t = Fraction(t)
            assert (a + b)(t) == a(t) + b(t)
            assert (a - b)(t) == a(t) - b(t)
            assert (a * b)(t) == a(t) * b(t)


def test_power():
    p = MU + 1
    assert p ** 0 == MuPoly.const(1)
    assert p ** 3 == p * p * p
    assert (MU ** 2)(Fraction(5)) == 25


def test_scalar_mixing():
    p = 2 * MU + 1
    assert p(Fraction(3)) == 7
    q = MU * Fraction(1, 2)
    assert q(Fraction(4)) == 2


def test_compose():
    # substitute mu + 2 into mu^2: (mu+2)^2
    p = MU ** 2
    q = p(MU + 2)
    assert q == MU ** 2 + 4 * MU + 4


def test_divexact():
    # (mu^2 + 3mu + 2) / (mu + 1) = mu + 2
    num = MU ** 2 + 3 * MU + 2
    assert num.divexact(MU + 1) == MU + 2
    # the defining cancellation of the expansion coefficients:
    # mu * (mu+3) * (mu+2) divided by (mu+2)
    prod = MU * (MU + 3) * (MU + 2)
    assert prod.divexact(MU + 2) == MU * (MU + 3)


def test_divexact_rejects_inexact():
    with pytest.raises(ValueError):
        (MU ** 2 + 1).divexact(MU + 1)


def test_str_descending_degree():
    p = MU * (MU + 3) * Fraction(1, 2)
    assert str(p) == "1/2*m^2 + 3/2*m"
    assert str(MuPoly.const(0)) == "0"
    assert str(MuPoly.const(-2)) == "-2"
