"""Dense univariate polynomials over exact rationals.

These show up as the coefficient ring for series raised to a symbolic power:
the entries of ``g(x)^m`` are polynomials in the exponent m, and the expansion
coefficients attached to partitions are polynomials in m as well.  The class
is deliberately small: exact arithmetic, evaluation, substitution of another
polynomial for the variable, and exact division (used to cancel factors such
as (m + k) out of products that provably contain them).

Conventions
-----------
* coefficients are stored constant-first, as a tuple of ``Fraction``;
* trailing zeros are stripped, so the leading coefficient of a nonzero
  polynomial is nonzero and the zero polynomial is the empty tuple;
* the variable prints as ``m``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an integer or Fraction, got {type(value).__name__}")


class MuPoly:
    """Polynomial in one variable m with Fraction coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "_coeffs", tuple(cs))

    @classmethod
    def const(cls, value: Scalar) -> "MuPoly":
        return cls((value,))

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        """Dense coefficients, constant first, no trailing zeros."""
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial; error if degree > 0."""
        if len(self._coeffs) > 1:
            raise ValueError("polynomial is not constant")
        return self._coeffs[0] if self._coeffs else Fraction(0)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "MuPoly | Scalar") -> "MuPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return MuPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "MuPoly":
        return MuPoly(tuple(-c for c in self._coeffs))

    def __sub__(self, other: "MuPoly | Scalar") -> "MuPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "MuPoly | Scalar") -> "MuPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: "MuPoly | Scalar") -> "MuPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return MuPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return MuPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MuPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MuPoly((1,))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divexact(self, divisor: "MuPoly") -> "MuPoly":
        """Exact polynomial division; raises if the remainder is nonzero.

        Used where a product is known to contain the divisor as a factor,
        e.g. cancelling (m + k) out of m * (m + k) * ... before comparing
        two derivations of the same coefficient.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self._coeffs)
        d = divisor._coeffs
        lead = d[-1]
        qlen = len(rem) - len(d) + 1
        if qlen <= 0:
            if any(rem):
                raise ValueError("division is not exact")
            return MuPoly()
        q = [Fraction(0)] * qlen
        for i in range(qlen - 1, -1, -1):
            c = rem[i + len(d) - 1] / lead
            q[i] = c
            if c:
                for j, dc in enumerate(d):
                    rem[i + j] -= c * dc
        if any(rem):
            raise ValueError("division is not exact")
        return MuPoly(q)

    def __call__(self, value: "MuPoly | Scalar") -> "MuPoly | Fraction":
        """Evaluate at a scalar, or substitute a polynomial for the variable."""
        if isinstance(value, MuPoly):
            acc = MuPoly()
            for c in reversed(self._coeffs):
                acc = acc * value + c
            return acc
        x = _as_fraction(value)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    # -- comparison and display -------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MuPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.constant_value())
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def dense(self) -> list[Fraction]:
        """Coefficients constant-first as a plain list ([] for zero)."""
        return list(self._coeffs)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for d in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[d]
            if c == 0:
                continue
            if d == 0:
                body = str(abs(c))
            else:
                var = "m" if d == 1 else f"m^{d}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"MuPoly({list(self._coeffs)!r})"


def _coerce(value: object) -> MuPoly | None:
    if isinstance(value, MuPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return MuPoly((value,))
    return None


#: the variable itself, for building polynomials expression-style
MU = MuPoly((0, 1))

ZERO = MuPoly()
ONE = MuPoly((1,))
