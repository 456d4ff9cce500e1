"""Riordan arrays: lower-triangular matrices built from a series pair.

An array is written (f(x), x*g(x)) with f(0) != 0 and g(0) != 0; column m
has generating function f(x) * (x*g(x))^m, so entry (n, m) is the x^n
coefficient of that column.  Entries are rational and exact.  Columns are
produced lazily, one multiplication by x*g at a time, and memoized; nothing
dense is ever materialized beyond what was asked for.

The group structure is the usual one:

    (f1, x*g1) * (f2, x*g2) : f = f1 * f2(x*g1),  g = g1 * g2(x*g1)
    inverse of (f, x*g)      : w = reversion(x*g), (1/f(w), w/x)

and an array acts on a series a(x) by f(x) * a(x*g(x)).  The action is also
exposed standalone as ``series_action`` for substitution series of higher
valuation, where the (f, x*g) normal form does not apply.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import MuPoly
from .series import OrderError, Series, compose, mul_inverse, reversion, subst_neg


def series_action(f: Series, u: Series, a: Series) -> Series:
    """f(x) * a(u(x)) for any substitution series u with u(0) = 0."""
    return f * compose(a, u)


def is_pseudo_involution(g: Series) -> bool:
    """Whether (1, x*g) composed with itself, signs alternated, is the identity.

    Tested through the equivalent series condition: the reversion of x*g(x)
    equals x*g(-x), up to the available order.  Requires g(0) = 1.
    """
    if g[0] != 1:
        raise ValueError("pseudo-involution test requires g(0) = 1")
    xg = g.shift(1)
    return reversion(xg) == subst_neg(g).shift(1)


class RiordanArray:
    """Exact lower-triangular array determined by the pair (f, x*g)."""

    __slots__ = ("_f", "_g", "_order", "_xg", "_cols")

    def __init__(self, f: Series, g: Series) -> None:
        if f.ring is not Fraction or g.ring is not Fraction:
            raise ValueError("Riordan arrays take rational series")
        if not f[0]:
            raise ValueError("f(0) must be nonzero")
        if not g[0]:
            raise ValueError("g(0) must be nonzero")
        order = min(f.order, g.order)
        self._f = f.truncate(order)
        self._g = g.truncate(order)
        self._order = order
        self._xg = self._g.shift(1).truncate(order)
        self._cols: dict[int, Series] = {0: self._f}

    @classmethod
    def from_unshifted(cls, f: Series, G: Series) -> "RiordanArray":
        """Build from (f, G) where G already carries the factor x."""
        if G[0]:
            raise ValueError("substitution series must have zero constant term")
        if not G[1]:
            raise ValueError("substitution series must have a nonzero linear term")
        return cls(f, G.shift_down(1))

    @classmethod
    def identity(cls, order: int) -> "RiordanArray":
        one = Series.one(order)
        return cls(one, one)

    @property
    def f(self) -> Series:
        return self._f

    @property
    def g(self) -> Series:
        return self._g

    @property
    def order(self) -> int:
        return self._order

    def _column(self, m: int) -> Series:
        col = self._cols.get(m)
        if col is None:
            col = self._column(m - 1) * self._xg
            self._cols[m] = col
        return col

    def entry(self, n: int, m: int) -> Fraction:
        """Entry d(n, m) = [x^n] f * (x*g)^m."""
        if n < 0 or m < 0:
            raise IndexError("indices must be nonnegative")
        if n > self._order:
            raise OrderError(f"row {n} beyond truncation order {self._order}")
        if m > n:
            return Fraction(0)
        return self._column(m)[n]

    def row(self, n: int) -> list[Fraction]:
        return [self.entry(n, m) for m in range(n + 1)]

    def row_poly(self, n: int) -> MuPoly:
        """Row n packed into a polynomial, entry (n, m) taken as the m-th coefficient."""
        return MuPoly(self.row(n))

    def multiply(self, other: "RiordanArray") -> "RiordanArray":
        f = self._f * compose(other._f, self._xg)
        g = self._g * compose(other._g, self._xg)
        return RiordanArray(f, g)

    def __mul__(self, other: "RiordanArray") -> "RiordanArray":
        if not isinstance(other, RiordanArray):
            return NotImplemented
        return self.multiply(other)

    def inverse(self) -> "RiordanArray":
        w = reversion(self._g.shift(1))
        f = mul_inverse(compose(self._f, w))
        return RiordanArray(f, w.shift_down(1))

    def apply(self, a: Series) -> Series:
        """The fundamental action on a series: f(x) * a(x*g(x))."""
        return series_action(self._f, self._xg, a)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RiordanArray):
            return NotImplemented
        return self._f == other._f and self._g == other._g

    def __repr__(self) -> str:
        return f"RiordanArray(f={self._f!r}, g={self._g!r})"
