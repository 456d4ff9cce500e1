"""Tests for A/B-sequence conversions, recurrence checks, factorization."""

import random
from fractions import Fraction

import pytest

import oracles
from riordan import (
    ASequence,
    BSequence,
    Factorization,
    NoBSequenceError,
    RiordanArray,
    Series,
    a_from_g,
    b_from_factorization,
    b_from_g,
    binomial_series,
    compose,
    factorize,
    g_from_a,
    g_from_b,
    is_pseudo_involution,
    mul_inverse,
    reversion,
    subst_neg,
    verify_a_recurrence,
    verify_b_recurrence,
)


def geometric(order):
    return mul_inverse(Series([1, -1], order=order))


def random_b(rng, max_len=5):
    n = rng.randint(1, max_len)
    return BSequence(tuple(rng.choice(oracles.POOL) for _ in range(n)))


def random_a(rng, max_len=5):
    n = rng.randint(1, max_len)
    coeffs = [Fraction(1)] + [rng.choice(oracles.POOL) for _ in range(n)]
    return ASequence(tuple(coeffs))


# ---------------------------------------------------------------- A-sequences

def test_a_from_g_fixtures():
    assert a_from_g(geometric(6)).coefficients == (1, 1, 0, 0, 0, 0, 0)
    catalan = binomial_series(2, 1, 6)
    assert a_from_g(catalan).coefficients == (1,) * 7
    motzkin = g_from_a(ASequence((1, 1, 1)), 6)
    assert a_from_g(motzkin).coefficients == (1, 1, 1, 0, 0, 0, 0)


def test_g_from_a_motzkin():
    g = g_from_a(ASequence((1, 1, 1)), 6)
    assert g.coefficients == (1, 1, 2, 4, 9, 21, 51)


def test_g_from_a_against_oracle():
    rng = random.Random(101)
    for _ in range(15):
        a = random_a(rng)
        g = g_from_a(a, 10)
        want = oracles.oracle_g_from_a(list(a.coefficients), 10)
        assert list(g.coefficients) == want


def test_a_round_trips_order_14():
    rng = random.Random(103)
    for _ in range(15):
        g = Series([Fraction(1)] + [rng.choice(oracles.POOL) for _ in range(14)],
                   order=14)
        assert g_from_a(ASequence(a_from_g(g).coefficients), 14) == g
    for _ in range(15):
        a = random_a(rng)
        g = g_from_a(a, 14)
        back = a_from_g(g)
        for i in range(15):
            want = a[i] if i < len(a.coefficients) else Fraction(0)
            assert back[i] == want


def test_a_recurrence_holds_for_any_f():
    rng = random.Random(107)
    for _ in range(10):
        g = Series([Fraction(1)] + [rng.choice(oracles.POOL) for _ in range(9)],
                   order=9)
        f = Series([rng.choice(oracles.POOL) for _ in range(10)], order=9)
        while f[0] == 0:
            f = Series([rng.choice(oracles.POOL) for _ in range(10)], order=9)
        a = ASequence(a_from_g(g).coefficients)
        assert verify_a_recurrence(RiordanArray(f, g), a)


def test_a_recurrence_rejects_wrong_sequence():
    g = geometric(6)
    P = RiordanArray(g, g)
    assert verify_a_recurrence(P, ASequence((1, 1)))
    assert not verify_a_recurrence(P, ASequence((1, 2)))


# ---------------------------------------------------------------- B-sequences

def test_b_from_g_pascal():
    b = b_from_g(geometric(8))
    assert b.coefficients == (1, 0, 0, 0)


def test_b_from_g_balanced_rows():
    # B-sequences of the series with [x^n] = (2m+1)/(2m+1+(m+1)n) * C(...)
    # are the rows 1, 3 1, 5 5 1, 7 14 7 1 of the balanced double-pole array.
    rows = {1: (3, 1), 2: (5, 5, 1), 3: (7, 14, 7, 1)}
    for m, row in rows.items():
        g = binomial_series(m + 1, 2 * m + 1, 12)
        b = b_from_g(g)
        got = b.coefficients[: len(row)]
        assert got == tuple(Fraction(c) for c in row)
        assert all(c == 0 for c in b.coefficients[len(row):])


def test_b_from_g_requires_pseudo_involution():
    motzkin = g_from_a(ASequence((1, 1, 1)), 8)
    with pytest.raises(NoBSequenceError, match="not a pseudo-involution"):
        b_from_g(motzkin)


def test_b_storage_stops_at_effective_length():
    b = b_from_g(geometric(9))
    assert len(b.coefficients) == 5  # indices 0..4 = floor((9-1)/2)


def test_g_from_b_fixtures():
    assert g_from_b(BSequence((1, 1)), 6).coefficients == (1, 1, 1, 2, 4, 7, 13)
    assert g_from_b(BSequence((2,)), 6) == mul_inverse(Series([1, -2], order=6))
    assert g_from_b(BSequence((1,)), 6) == geometric(6)
    assert g_from_b(BSequence((3, 1)), 10) == binomial_series(2, 3, 10)


def test_g_from_b_against_oracle():
    rng = random.Random(109)
    for _ in range(15):
        b = random_b(rng)
        g = g_from_b(b, 10)
        want = oracles.oracle_g_from_b(list(b.coefficients), 10)
        assert list(g.coefficients) == want


def test_b_round_trips_order_14():
    rng = random.Random(113)
    for _ in range(20):
        b = random_b(rng)
        g = g_from_b(b, 14)
        back = b_from_g(g)
        for i in range(len(back.coefficients)):
            want = b[i] if i < len(b.coefficients) else Fraction(0)
            assert back[i] == want
        assert g_from_b(back, 14) == g


def test_fixed_point_coefficients_stabilize():
    # coefficient n must already be exact after n iteration rounds: raising
    # the order can only append, never change, earlier coefficients
    b = BSequence((1, Fraction(1, 2), -2))
    low = g_from_b(b, 7)
    high = g_from_b(b, 14)
    assert high.truncate(7) == low
    a = ASequence((1, -1, Fraction(1, 2)))
    assert g_from_a(a, 14).truncate(7) == g_from_a(a, 7)


def test_pseudo_involution_law_for_generated_g():
    rng = random.Random(127)
    for _ in range(15):
        g = g_from_b(random_b(rng), 10)
        xg = g.shift(1).truncate(10)
        assert reversion(xg) == subst_neg(g).shift(1).truncate(10)
        assert is_pseudo_involution(g)


def test_b_recurrence_fixtures():
    g = geometric(8)
    P = RiordanArray(g, g)
    assert verify_b_recurrence(P, BSequence((1,)))
    assert not verify_b_recurrence(P, BSequence((2,)))
    g2 = g_from_b(BSequence((1, 1)), 8)
    A2 = RiordanArray(Series([1], order=8), g2)
    assert verify_b_recurrence(A2, BSequence((1, 1)))
    assert not verify_b_recurrence(A2, BSequence((1, 0)))


def test_b_recurrence_for_random_generated_arrays():
    rng = random.Random(131)
    for _ in range(10):
        b = random_b(rng)
        g = g_from_b(b, 10)
        arr = RiordanArray(Series([1], order=10), g)
        assert verify_b_recurrence(arr, b)


def test_b_uniqueness_at_fixed_order():
    # the triangular solve pins every stored entry: changing any one of them
    # breaks the defining recurrence
    rng = random.Random(137)
    b = BSequence((1, -1, Fraction(1, 2)))
    g = g_from_b(b, 12)
    arr = RiordanArray(Series([1], order=12), g)
    stored = b_from_g(g).coefficients
    for i in range(len(stored)):
        tweaked = list(stored)
        tweaked[i] += 1
        assert not verify_b_recurrence(arr, BSequence(tuple(tweaked)))


# ---------------------------------------------------------------- factorization

def test_factorize_double_geometric():
    # g = 1/(1-2x): h = x + sqrt(x^2+1), s = x
    g = mul_inverse(Series([1, -2], order=8))
    fac = factorize(g)
    root = oracles.list_sqrt([Fraction(1), Fraction(0), Fraction(1)], 8)
    want_h = list(root)
    want_h[1] += 1
    assert list(fac.h.coefficients) == want_h
    assert fac.s == Series.x(8)
    assert b_from_factorization(fac).coefficients[0] == 2
    assert all(c == 0 for c in b_from_factorization(fac).coefficients[1:])


def test_factorize_trivial():
    fac = factorize(Series([1], order=6))
    assert fac.h == Series([1], order=6)
    assert fac.s == Series.zero(6)
    assert fac.sqrt_g == Series([1], order=6)


def test_factorize_quartic_discriminant_fixture():
    # g with x*g = (1 - 4x + x^2 - sqrt((1-4x+x^2)^2 - 4x^2)) / (2x):
    # sqrt_g counts Schroeder paths, h = (1+x)/(1-x), s = 2x/(1-x^2)
    N = 10
    disc = oracles.list_sqrt(
        [Fraction(1), Fraction(-8), Fraction(14), Fraction(-8), Fraction(1)],
        N + 2)
    num = [-c for c in disc]
    num[0] += 1
    num[1] += -4
    num[2] += 1
    g = Series([c / 2 for c in num[2:]], order=N)
    assert is_pseudo_involution(g)
    fac = factorize(g)
    assert fac.sqrt_g.coefficients[:6] == (1, 2, 6, 22, 90, 394)
    one_minus = mul_inverse(Series([1, -1], order=N))
    assert fac.h == Series([1, 1], order=N) * one_minus
    assert fac.s == Series([0, 2], order=N) * mul_inverse(Series([1, 0, -1], order=N))
    assert b_from_g(g).coefficients == (4, 4, 4, 4, 4)


def test_factorization_composition_law():
    rng = random.Random(139)
    for _ in range(15):
        g = g_from_b(random_b(rng), 14)
        fac = factorize(g)
        xr = fac.sqrt_g.shift(1).truncate(14)
        assert xr * compose(fac.h, xr) == g.shift(1).truncate(14)


def sqrt_via_oracle(a):
    return Series(oracles.list_sqrt(list(a.coefficients), a.order),
                  order=a.order)


def test_factorization_h_symmetry():
    rng = random.Random(149)
    for _ in range(15):
        g = g_from_b(random_b(rng), 12)
        fac = factorize(g)
        assert fac.h * subst_neg(fac.h) == Series([1], order=12)
        assert subst_neg(fac.s) == fac.s.scale(Fraction(-1))
        assert fac.h == fac.s + sqrt_via_oracle(fac.s * fac.s + Series([1], order=12))


def test_recovered_b_matches_triangular_solve():
    rng = random.Random(151)
    for _ in range(15):
        g = g_from_b(random_b(rng), 14)
        assert b_from_factorization(factorize(g)) == b_from_g(g)


def test_b_from_factorization_rejects_even_terms():
    fac = Factorization(
        sqrt_g=Series([1], order=6),
        h=Series([1, 1], order=6),
        s=Series([0, 1, 1], order=6),
    )
    with pytest.raises(ValueError):
        b_from_factorization(fac)


def test_factorize_rejects_non_pseudo():
    with pytest.raises(ValueError):
        factorize(Series([1, 1], order=6))
