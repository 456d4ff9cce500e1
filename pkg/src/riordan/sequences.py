"""A- and B-sequences of a Riordan array, and the pseudo-involution factorization.

For an array (f, x*g) the A-sequence rebuilds each entry from the row above,

    d(n+1, m+1) = a0*d(n, m+1) + a1*d(n, m+2) + ...

and is tied to g by g = A(x*g).  The B-sequence does the same for arrays
whose inverse is the sign-conjugated array,

    d(n+1, m) = d(n, m-1) + sum_i b_i * d(n-i, m+i)      (d(n, -1) = 0)

and is tied to g by g = 1 + x*g*B(x^2*g).  A g of order N determines B
through index floor((N-1)/2) and no further.

The factorization splits (1, x*g), for g a pseudo-involution with g(0) = 1,
as (1, x*sqrt(g)) * (1, x*h) where h = sqrt(g) evaluated through the
reversion of x*sqrt(g).  This h satisfies h(-x) = 1/h(x), so its odd part
s = (h - 1/h)/2 has zero even coefficients, and the B-sequence is read off
as b_n = 2*s(2n+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .array import RiordanArray, is_pseudo_involution
from .series import Series, compose, mul_inverse, reversion, sqrt1


class NoBSequenceError(ValueError):
    """The series does not admit a B-sequence."""


def _fraction_tuple(values) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class ASequence:
    """Finite prefix of an A-sequence; entries beyond the stored ones are zero."""

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients) -> None:
        object.__setattr__(self, "coefficients", _fraction_tuple(coefficients))
        if not self.coefficients:
            raise ValueError("an A-sequence needs at least a0")

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, i: int) -> Fraction:
        return self.coefficients[i] if i < len(self.coefficients) else Fraction(0)

    def series(self, order: int) -> Series:
        return Series(self.coefficients, order=order)


@dataclass(frozen=True)
class BSequence:
    """Finite prefix of a B-sequence; entries beyond the stored ones are zero."""

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients) -> None:
        object.__setattr__(self, "coefficients", _fraction_tuple(coefficients))

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, i: int) -> Fraction:
        return self.coefficients[i] if i < len(self.coefficients) else Fraction(0)

    def series(self, order: int) -> Series:
        if not self.coefficients:
            return Series.zero(order)
        return Series(self.coefficients, order=order)


@dataclass(frozen=True)
class Factorization:
    """Square-root split of (1, x*g): the pair (1, x*sqrt_g) * (1, x*h).

    ``s`` is the odd half (h - 1/h)/2, whose even coefficients vanish.
    """

    sqrt_g: Series
    h: Series
    s: Series


def a_from_g(g: Series) -> ASequence:
    """A-sequence of (_, x*g): A = g evaluated through the reversion of x*g."""
    if not g[0]:
        raise ValueError("g(0) must be nonzero")
    w = reversion(g.shift(1))
    a = compose(g, w)
    return ASequence(a.coefficients)


def g_from_a(a: ASequence, order: int) -> Series:
    """Solve g = A(x*g) by fixed-point iteration, exact to ``order``.

    Coefficient n is stable after n rounds; we run ``order`` rounds.
    """
    if not a[0]:
        raise ValueError("a0 must be nonzero")
    a_ser = a.series(order)
    g = Series([a[0]], order=order)
    for _ in range(order):
        g = compose(a_ser, g.shift(1).truncate(order))
    return g


def b_from_g(g: Series) -> BSequence:
    """B-sequence of g, defined through index floor((order-1)/2).

    Solves g = 1 + x*g*B(x^2*g) triangularly for the b_i.  Raises
    NoBSequenceError when g is not a pseudo-involution (the odd part of the
    residual refuses to cancel).
    """
    if g[0] != 1:
        raise ValueError("B-sequence extraction requires g(0) = 1")
    if g.order < 1:
        raise ValueError("need at least order 1 to extract a B-sequence")
    if not is_pseudo_involution(g):
        raise NoBSequenceError("no B-sequence: not a pseudo-involution")
    n = g.order - 1
    # w = (g - 1)/(x*g) must equal B(x^2*g); peel one b_i per even index
    w = (g - 1).shift_down(1) * mul_inverse(g)
    u = g.shift(2).truncate(n)
    residual = w.truncate(n)
    upow = Series.one(n)
    bs: list[Fraction] = []
    for i in range((n // 2) + 1):
        bi = residual[2 * i]
        bs.append(bi)
        residual = residual - bi * upow
        upow = upow * u
    if residual.valuation() is not None:
        raise NoBSequenceError("no B-sequence: not a pseudo-involution")
    return BSequence(bs)


def g_from_b(b: BSequence, order: int) -> Series:
    """Solve g = 1 + x*g*B(x^2*g) by fixed-point iteration, exact to ``order``."""
    b_ser = b.series(order)
    g = Series.one(order)
    for _ in range(order):
        xg = g.shift(1).truncate(order)
        xxg = g.shift(2).truncate(order)
        g = 1 + xg * compose(b_ser, xxg)
    return g


def verify_a_recurrence(array: RiordanArray, a: ASequence) -> bool:
    """Check d(n+1, m+1) = sum_i a_i * d(n, m+i) over the whole known triangle."""
    for n in range(array.order):
        for m in range(n + 1):
            rhs = Fraction(0)
            for i in range(len(a)):
                if m + i > n:
                    break
                rhs += a[i] * array.entry(n, m + i)
            if array.entry(n + 1, m + 1) != rhs:
                return False
    return True


def verify_b_recurrence(array: RiordanArray, b: BSequence) -> bool:
    """Check d(n+1, m) = d(n, m-1) + sum_i b_i * d(n-i, m+i) over the triangle.

    Columns m >= 1 are checked: the law ties each column to the one on its
    left.  The m = 0 column obeys it only for special f (f = g), so it is
    not part of the defining property.
    """
    for n in range(array.order):
        for m in range(1, n + 2):
            rhs = array.entry(n, m - 1)
            for i in range(len(b)):
                if i > n or m + i > n - i:
                    break
                rhs += b[i] * array.entry(n - i, m + i)
            if array.entry(n + 1, m) != rhs:
                return False
    return True


def factorize(g: Series) -> Factorization:
    """Split (1, x*g) as (1, x*sqrt_g) * (1, x*h); g must be a pseudo-involution.

    h is characterized by x*sqrt_g(x) * h(x*sqrt_g(x)) = x*g(x), i.e.
    h = sqrt_g composed with the reversion of x*sqrt_g, and it satisfies
    h(-x) = 1/h(x).
    """
    if g[0] != 1:
        raise ValueError("factorization requires g(0) = 1")
    if not is_pseudo_involution(g):
        raise NoBSequenceError("no B-sequence: not a pseudo-involution")
    sg = sqrt1(g)
    h = compose(sg, reversion(sg.shift(1)))
    s = (h - mul_inverse(h)) / 2
    return Factorization(sqrt_g=sg, h=h, s=s)


def b_from_factorization(fact: Factorization) -> BSequence:
    """Read the B-sequence off the odd half: b_n = 2 * s(2n+1)."""
    s = fact.s
    for i in range(0, s.order + 1, 2):
        if s[i]:
            raise ValueError("odd half has a nonzero even coefficient")
    return BSequence([2 * s[2 * i + 1] for i in range((s.order + 1) // 2)])
