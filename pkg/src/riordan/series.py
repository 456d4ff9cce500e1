"""Truncated formal power series with exact coefficients.

A ``Series`` holds coefficients c0..cN and the truncation order N; nothing
beyond N is known, and asking for it is an error rather than a silent zero.
Coefficients live in one of two rings: plain rationals (``Fraction``) or
polynomials in a symbolic exponent (``MuPoly``).  Binary operations insist
that both operands use the same ring; ``lift()`` moves a rational series
into the polynomial ring when mixing is intended.

Truncation bookkeeping follows the usual rules: sums and products carry the
tighter of the two orders, composition a(u(x)) with u(0) = 0 is good to
min(order(u), v*(order(a)+1) - 1) where v is the valuation of u, and the
shift helpers move knowledge along with the coefficients (multiplying by x
raises the order by one, dividing lowers it).

Constructing a series from an explicit coefficient list with a larger
``order`` pads with zeros; that is a claim that the input is an exact
polynomial, known to any order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from .poly import MU, MuPoly, Scalar

Coeff = Union[Fraction, MuPoly]
CoeffIn = Union[int, Fraction, MuPoly]


class OrderError(IndexError):
    """A coefficient beyond the truncation order was requested."""


class RingMismatchError(ValueError):
    """Operands use different coefficient rings; lift() one of them first."""


def _ring_zero(ring: type) -> Coeff:
    return Fraction(0) if ring is Fraction else MuPoly()


def _ring_one(ring: type) -> Coeff:
    return Fraction(1) if ring is Fraction else MuPoly((1,))


def _to_ring(value: CoeffIn, ring: type) -> Coeff:
    if ring is Fraction:
        if isinstance(value, MuPoly):
            raise RingMismatchError("polynomial coefficient in a rational series")
        return Fraction(value)
    if isinstance(value, MuPoly):
        return value
    return MuPoly((value,))


class Series:
    """A power series known exactly up to its truncation order."""

    __slots__ = ("_coeffs", "_ring")

    def __init__(self, coeffs: Iterable[CoeffIn], order: int | None = None) -> None:
        raw = list(coeffs)
        ring = Fraction
        for c in raw:
            if isinstance(c, MuPoly):
                ring = MuPoly
                break
        cs = [_to_ring(c, ring) for c in raw]
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            if len(cs) > order + 1:
                del cs[order + 1 :]
            else:
                zero = _ring_zero(ring)
                cs.extend([zero] * (order + 1 - len(cs)))
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        self._coeffs = tuple(cs)
        self._ring = ring

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int, ring: type = Fraction) -> "Series":
        return cls([_ring_zero(ring)], order=order)

    @classmethod
    def one(cls, order: int, ring: type = Fraction) -> "Series":
        return cls([_ring_one(ring)], order=order)

    @classmethod
    def x(cls, order: int) -> "Series":
        if order < 1:
            raise ValueError("order must be at least 1 to hold x")
        return cls([0, 1], order=order)

    # -- basic access ------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def ring(self) -> type:
        return self._ring

    @property
    def coefficients(self) -> tuple[Coeff, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> Coeff:
        if not isinstance(n, int) or n < 0:
            raise IndexError("coefficient index must be a nonnegative integer")
        if n >= len(self._coeffs):
            raise OrderError(f"coefficient {n} beyond truncation order {self.order}")
        return self._coeffs[n]

    def valuation(self) -> int | None:
        """Index of the first nonzero known coefficient, None if all vanish."""
        for i, c in enumerate(self._coeffs):
            if c:
                return i
        return None

    def truncate(self, order: int) -> "Series":
        """Forget coefficients beyond ``order`` (which must not exceed ours)."""
        if order > self.order:
            raise OrderError(f"cannot extend knowledge from order {self.order} to {order}")
        if order == self.order:
            return self
        return Series(self._coeffs[: order + 1])

    def lift(self) -> "Series":
        """The same series with coefficients in the polynomial ring."""
        if self._ring is MuPoly:
            return self
        return Series([MuPoly((c,)) for c in self._coeffs])

    def eval_mu(self, value: Scalar) -> "Series":
        """Evaluate every polynomial coefficient at a concrete exponent."""
        if self._ring is Fraction:
            return self
        return Series([c(value) for c in self._coeffs])

    # -- ring operations ---------------------------------------------------

    def _check_ring(self, other: "Series") -> None:
        if self._ring is not other._ring:
            raise RingMismatchError(
                "series use different coefficient rings; lift() the rational one"
            )

    def __add__(self, other: "Series | CoeffIn") -> "Series":
        if isinstance(other, Series):
            self._check_ring(other)
            n = min(self.order, other.order)
            return Series(
                [self._coeffs[i] + other._coeffs[i] for i in range(n + 1)]
            )
        c = _to_ring(other, self._ring)
        out = list(self._coeffs)
        out[0] = out[0] + c
        return Series(out)

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series([-c for c in self._coeffs])

    def __sub__(self, other: "Series | CoeffIn") -> "Series":
        if isinstance(other, Series):
            return self + (-other)
        return self + (-_to_ring(other, self._ring))

    def __rsub__(self, other: CoeffIn) -> "Series":
        return (-self) + other

    def __mul__(self, other: "Series | CoeffIn") -> "Series":
        if isinstance(other, Series):
            self._check_ring(other)
            n = min(self.order, other.order)
            zero = _ring_zero(self._ring)
            out = [zero] * (n + 1)
            for i in range(n + 1):
                ci = self._coeffs[i]
                if not ci:
                    continue
                for j in range(n + 1 - i):
                    cj = other._coeffs[j]
                    if cj:
                        out[i + j] += ci * cj
            return Series(out)
        return self.scale(other)

    def __rmul__(self, other: CoeffIn) -> "Series":
        return self.scale(other)

    def scale(self, c: CoeffIn) -> "Series":
        c = _to_ring(c, self._ring)
        return Series([c * v for v in self._coeffs])

    def __truediv__(self, c: CoeffIn) -> "Series":
        if isinstance(c, Series):
            raise TypeError("use mul_inverse for series division")
        if isinstance(c, MuPoly):
            if not c.is_constant():
                raise ValueError("can only divide by a constant polynomial")
            value = c.constant_value()
        else:
            value = Fraction(c)
        if not value:
            raise ZeroDivisionError("division by zero")
        return self.scale(Fraction(1) / value)

    # -- shifts ------------------------------------------------------------

    def shift(self, k: int = 1) -> "Series":
        """Multiply by x^k; the result is known to order + k."""
        if k < 0:
            return self.shift_down(-k)
        zero = _ring_zero(self._ring)
        return Series([zero] * k + list(self._coeffs))

    def shift_down(self, k: int = 1) -> "Series":
        """Divide by x^k; the first k coefficients must be zero."""
        if k == 0:
            return self
        if k > self.order:
            raise OrderError("not enough known coefficients to divide by x^k")
        for i in range(k):
            if self._coeffs[i]:
                raise ValueError(f"coefficient of x^{i} is nonzero, cannot divide by x^{k}")
        return Series(self._coeffs[k:])

    # -- comparison --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        """Coefficientwise equality up to the smaller truncation order."""
        if not isinstance(other, Series):
            return NotImplemented
        a, b = self, other
        if a._ring is not b._ring:
            a, b = a.lift(), b.lift()
        n = min(a.order, b.order)
        return a._coeffs[: n + 1] == b._coeffs[: n + 1]

    def __hash__(self) -> int:  # pragma: no cover - not used as dict keys
        return hash(self._coeffs)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self._coeffs[:8])
        extra = ", ..." if len(self._coeffs) > 8 else ""
        return f"Series([{shown}{extra}], order={self.order})"


# -- series-level operations -----------------------------------------------


def compose(a: Series, u: Series) -> Series:
    """a(u(x)) for u with zero constant term.

    The result order is min(order(u), v*(order(a)+1) - 1) with v the
    valuation of u: the first unknown coefficient of a first bleeds into
    x^(v*(order(a)+1)).  A u that is zero to its whole order gives the
    constant a(0) known to order(u).
    """
    a._check_ring(u)
    ring = a.ring
    if u[0]:
        raise ValueError("composition requires a series with zero constant term")
    v = u.valuation()
    if v is None:
        return Series([a[0]], order=u.order)
    n_out = min(u.order, v * (a.order + 1) - 1)
    ut = u.truncate(n_out) if n_out < u.order else u
    k_max = min(a.order, n_out // v)
    acc = Series([a[k_max]], order=n_out)
    for k in range(k_max - 1, -1, -1):
        acc = acc * ut + a[k]
    return acc


def mul_inverse(a: Series) -> Series:
    """1/a(x); the constant term must be invertible in the coefficient ring."""
    a0 = a[0]
    if not a0:
        raise ValueError("constant term is zero, series is not invertible")
    if isinstance(a0, MuPoly):
        if not a0.is_constant():
            raise ValueError("constant term must be a nonzero rational to invert")
        inv0: Coeff = MuPoly((1 / a0.constant_value(),))
    else:
        inv0 = 1 / a0
    out = [inv0]
    for n in range(1, a.order + 1):
        s = _ring_zero(a.ring)
        for i in range(1, n + 1):
            ai = a[i]
            if ai:
                s += ai * out[n - i]
        out.append(-inv0 * s)
    return Series(out)


def reversion(u: Series) -> Series:
    """The compositional inverse v with u(v(x)) = x.

    Needs u(0) = 0 and an invertible linear coefficient.  Solved
    triangularly: with v known through x^(n-1), the coefficient v_n is
    fixed by [x^n] u(v) = 0.
    """
    if u[0]:
        raise ValueError("reversion requires a series with zero constant term")
    u1 = u[1]
    if not u1:
        raise ValueError("reversion requires a nonzero linear coefficient")
    if isinstance(u1, MuPoly):
        if not u1.is_constant():
            raise ValueError("linear coefficient must be a nonzero rational")
        inv1: Coeff = MuPoly((1 / u1.constant_value(),))
    else:
        inv1 = 1 / u1
    zero = _ring_zero(u.ring)
    v = [zero, inv1]
    for n in range(2, u.order + 1):
        vt = Series(v + [zero], order=n)
        w = compose(u.truncate(n), vt)
        # with the placeholder v_n = 0, [x^n] u(v) is off by u1 * v_n
        v.append(-inv1 * w[n])
    return Series(v, order=u.order)


def sqrt1(a: Series) -> Series:
    """The square root with constant term 1; rational coefficients only."""
    if a.ring is not Fraction:
        raise RingMismatchError("sqrt1 is defined for rational series")
    if a[0] != 1:
        raise ValueError("sqrt1 requires constant term 1")
    r = [Fraction(1)]
    for n in range(1, a.order + 1):
        s = Fraction(0)
        for i in range(1, n):
            s += r[i] * r[n - i]
        r.append((a[n] - s) / 2)
    return Series(r)


def log1(a: Series) -> Series:
    """log of a series with constant term 1; works in both rings."""
    if a[0] != _ring_one(a.ring):
        raise ValueError("log1 requires constant term 1")
    zero = _ring_zero(a.ring)
    out = [zero]
    for n in range(1, a.order + 1):
        s = zero
        for t in range(1, n):
            lt = out[t]
            if lt:
                s += Fraction(t, n) * lt * a[n - t]
        out.append(a[n] - s)
    return Series(out)


def exp0(a: Series) -> Series:
    """exp of a series with zero constant term; works in both rings."""
    if a[0]:
        raise ValueError("exp0 requires zero constant term")
    out = [_ring_one(a.ring)]
    for n in range(1, a.order + 1):
        s = _ring_zero(a.ring)
        for k in range(1, n + 1):
            ak = a[k]
            if ak:
                s += Fraction(k, n) * ak * out[n - k]
        out.append(s)
    return Series(out)


def power(a: Series, e: "int | MuPoly") -> Series:
    """a^e for an integer exponent, or a symbolic one via exp(e * log a).

    A negative or symbolic exponent requires constant term 1; a plain
    nonnegative integer power works for any series.
    """
    if isinstance(e, MuPoly):
        if e.is_constant():
            c = e.constant_value()
            if c.denominator == 1:
                return power(a, int(c))
            raise ValueError("symbolic exponent must be a polynomial or an integer")
        if a[0] != _ring_one(a.ring):
            raise ValueError("symbolic powers require constant term 1")
        return exp0(log1(a.lift()) * e)
    if not isinstance(e, int):
        raise TypeError("exponent must be an integer or a MuPoly")
    if e < 0:
        if a[0] != _ring_one(a.ring):
            raise ValueError("negative powers require constant term 1")
        return mul_inverse(power(a, -e))
    result = Series.one(a.order, a.ring)
    base = a
    k = e
    while k:
        if k & 1:
            result = result * base
        base = base * base
        k >>= 1
    return result


def subst_neg(a: Series) -> Series:
    """a(-x): flip the sign of every odd coefficient."""
    return Series([c if i % 2 == 0 else -c for i, c in enumerate(a.coefficients)])
