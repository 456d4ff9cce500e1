"""Partition-indexed expansions of series powers.

For g determined by a B-sequence, the coefficient [x^n] g(x)^m is a sum over
partitions of n into odd parts 1, 3, 5, ...: a partition with multiplicity
m_i for part 2i+1 contributes

    m * (m+k-1) * (m+k-2) * ... * (m+k-q+1) / (m_0! * m_1! * ...)
      * b_0^{m_0} * b_1^{m_1} * ...

where q is the number of parts and k = sum of m_i*(i+1).  For g determined
by an A-sequence with a_0 = 1 the analogous sum runs over all partitions of
n, with k replaced by n.  Both coefficient families live in the polynomial
ring in m, so tables can be evaluated at any exponent, negative included.

Also here: the generalized binomial series Bin_r with [x^n] Bin_r^m =
m/(m+rn) * C(m+rn, n) (r = 2, m = 1 gives the Catalan numbers), the
associated tables with the recurrence (m, n) = (m-1, n) + (m+r-1, n-1),
and a family of identity checks the test suite leans on: the classical
Lagrange relation between powers of g and powers of its A-sequence
generating function, binomial-type rewrites of [x^n] g^m, the expansion of
the odd factor h through half powers, and the closed action form of
two-letter sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .array import series_action
from .poly import MU, MuPoly
from .sequences import ASequence, BSequence, a_from_g, factorize, g_from_a, g_from_b
from .series import Series, log1, power

# -- partitions ------------------------------------------------------------


@dataclass(frozen=True)
class OddPartition:
    """Partition into odd parts, as multiplicities: exponents[i] copies of 2i+1."""

    exponents: tuple[int, ...]

    def __init__(self, exponents) -> None:
        exps = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exps):
            raise ValueError("multiplicities must be nonnegative")
        object.__setattr__(self, "exponents", exps)

    @property
    def n(self) -> int:
        """The partitioned total."""
        return sum(m * (2 * i + 1) for i, m in enumerate(self.exponents))

    @property
    def k(self) -> int:
        """Weighted part count: sum of m_i * (i+1)."""
        return sum(m * (i + 1) for i, m in enumerate(self.exponents))

    @property
    def q(self) -> int:
        """Number of parts."""
        return sum(self.exponents)

    def factorial_product(self) -> int:
        out = 1
        for m in self.exponents:
            out *= factorial(m)
        return out

    def monomial_value(self, b: BSequence) -> Fraction:
        """The product of b_i^{m_i} over the nonzero multiplicities."""
        out = Fraction(1)
        for i, m in enumerate(self.exponents):
            if m:
                out *= b[i] ** m
        return out

    def monomial_label(self, letter: str = "b") -> str:
        parts = []
        for i, m in enumerate(self.exponents):
            if m:
                parts.append(f"{letter}{i}" if m == 1 else f"{letter}{i}^{m}")
        return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class Partition:
    """Ordinary partition, as multiplicities: exponents[j] copies of j+1."""

    exponents: tuple[int, ...]

    def __init__(self, exponents) -> None:
        exps = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exps):
            raise ValueError("multiplicities must be nonnegative")
        object.__setattr__(self, "exponents", exps)

    @property
    def n(self) -> int:
        return sum(m * (j + 1) for j, m in enumerate(self.exponents))

    @property
    def q(self) -> int:
        return sum(self.exponents)

    def factorial_product(self) -> int:
        out = 1
        for m in self.exponents:
            out *= factorial(m)
        return out

    def monomial_value(self, a: ASequence) -> Fraction:
        """The product of a_{j+1}^{m_j}, letters taken from an A-sequence."""
        out = Fraction(1)
        for j, m in enumerate(self.exponents):
            if m:
                out *= a[j + 1] ** m
        return out

    def monomial_label(self, letter: str = "a") -> str:
        parts = []
        for j, m in enumerate(self.exponents):
            if m:
                parts.append(f"{letter}{j + 1}" if m == 1 else f"{letter}{j + 1}^{m}")
        return "*".join(parts) if parts else "1"


def odd_partitions(n: int) -> list[OddPartition]:
    """All partitions of n into odd parts, multiplicity vectors in
    descending lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")
    slots = (n + 1) // 2
    out: list[OddPartition] = []

    def rec(i: int, rem: int, acc: tuple[int, ...]) -> None:
        part = 2 * i + 1
        if i == slots - 1:
            if rem % part == 0:
                out.append(OddPartition(acc + (rem // part,)))
            return
        for m in range(rem // part, -1, -1):
            rec(i + 1, rem - m * part, acc + (m,))

    rec(0, n, ())
    return out


def all_partitions(n: int) -> list[Partition]:
    """All partitions of n, multiplicity vectors in descending lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")
    out: list[Partition] = []

    def rec(j: int, rem: int, acc: tuple[int, ...]) -> None:
        part = j + 1
        if j == n - 1:
            if rem % part == 0:
                out.append(Partition(acc + (rem // part,)))
            return
        for m in range(rem // part, -1, -1):
            rec(j + 1, rem - m * part, acc + (m,))

    rec(0, n, ())
    return out


# -- coefficient polynomials -----------------------------------------------


def _rising_from(shift: int, count: int) -> MuPoly:
    """(m + shift) * (m + shift - 1) * ... , ``count`` descending factors."""
    acc = MuPoly((1,))
    for t in range(count):
        acc = acc * (MU + (shift - t))
    return acc


def _binom_poly(shift: int, j: int) -> MuPoly:
    """C(m + shift, j) as a polynomial in m."""
    return _rising_from(shift, j) * Fraction(1, factorial(j))


def b_coeff(pt: OddPartition) -> MuPoly:
    """Coefficient polynomial of a B-letter monomial in [x^n] g^m.

    m times the falling product from m+k-1 down to m+k-q+1, divided by the
    product of multiplicity factorials; 1 for the empty partition.
    """
    q = pt.q
    if q == 0:
        return MuPoly((1,))
    acc = MU * _rising_from(pt.k - 1, q - 1)
    return acc * Fraction(1, pt.factorial_product())


def a_coeff(pt: Partition) -> MuPoly:
    """Coefficient polynomial of an A-letter monomial in [x^n] g^m.

    Same shape as the B-side coefficient with k replaced by n:
    m * (m+n-1) * ... * (m+n-q+1) / (m_1! * m_2! * ...).
    """
    q = pt.q
    if q == 0:
        return MuPoly((1,))
    acc = MU * _rising_from(pt.n - 1, q - 1)
    return acc * Fraction(1, pt.factorial_product())


def b_coeff_via_binomial(r: int, mult: int) -> MuPoly:
    """One-letter coefficient by the binomial route.

    The coefficient of b_r^{mult} equals m/(m + r*mult) * C(m + r*mult +
    mult - 1, mult); the divisor cancels exactly against the binomial.
    """
    if r < 0 or mult < 0:
        raise ValueError("indices must be nonnegative")
    if mult == 0:
        return MuPoly((1,))
    num = MU * _binom_poly(r * mult + mult - 1, mult)
    return num.divexact(MuPoly((r * mult, 1)))


def b_coeff_two_letter(r: int, mult_r: int, s: int, mult_s: int) -> MuPoly:
    """Two-letter coefficient by the iterated binomial route.

    For distinct letters b_r, b_s with k = mult_r*(r+1) + mult_s*(s+1) the
    coefficient is m/(m+k-mult_r-mult_s) * C(m+k-1, mult_r) *
    C(m+k-1-mult_r, mult_s); again an exact cancellation.
    """
    if r == s:
        raise ValueError("letters must be distinct")
    if mult_r < 0 or mult_s < 0:
        raise ValueError("multiplicities must be nonnegative")
    k = mult_r * (r + 1) + mult_s * (s + 1)
    num = MU * _binom_poly(k - 1, mult_r) * _binom_poly(k - 1 - mult_r, mult_s)
    return num.divexact(MuPoly((k - mult_r - mult_s, 1)))


# -- expansion tables ------------------------------------------------------


@dataclass(frozen=True)
class ExpansionRow:
    partition: "OddPartition | Partition"
    coefficient: MuPoly
    monomial: "Fraction | None" = None


@dataclass(frozen=True)
class ExpansionTable:
    """All partition terms of [x^n] g^m, coefficient polynomials in m.

    ``monomial`` is the numeric value of the letter product when the table
    was built from concrete sequence values, else None.
    """

    n: int
    rows: tuple[ExpansionRow, ...]

    def as_poly(self) -> MuPoly:
        total = MuPoly()
        for row in self.rows:
            if row.monomial is None:
                raise ValueError("table has symbolic letters, no numeric value")
            total = total + row.coefficient * row.monomial
        return total

    def eval_at(self, m: int | Fraction) -> Fraction:
        value = self.as_poly()(m)
        assert isinstance(value, Fraction)
        return value


def b_coeff_table(n: int) -> ExpansionTable:
    """Symbolic table over all odd partitions of n."""
    rows = tuple(ExpansionRow(pt, b_coeff(pt)) for pt in odd_partitions(n))
    return ExpansionTable(n=n, rows=rows)


def a_coeff_table(n: int) -> ExpansionTable:
    """Symbolic table over all partitions of n."""
    rows = tuple(ExpansionRow(pt, a_coeff(pt)) for pt in all_partitions(n))
    return ExpansionTable(n=n, rows=rows)


def expand_b(b: BSequence, n: int) -> ExpansionTable:
    """Table for [x^n] g^m with g built from B-letters; keys are exactly the
    odd partitions of n, letters beyond the stored prefix counting as zero."""
    rows = tuple(
        ExpansionRow(pt, b_coeff(pt), pt.monomial_value(b)) for pt in odd_partitions(n)
    )
    return ExpansionTable(n=n, rows=rows)


def expand_a(a: ASequence, n: int) -> ExpansionTable:
    """Table for [x^n] g^m with g built from A-letters; requires a_0 = 1."""
    if a[0] != 1:
        raise ValueError("A-letter expansion requires a0 = 1")
    rows = tuple(
        ExpansionRow(pt, a_coeff(pt), pt.monomial_value(a)) for pt in all_partitions(n)
    )
    return ExpansionTable(n=n, rows=rows)


def expand_b_regrouped(b: BSequence, m: int, order: int) -> Series:
    """g^m reassembled by powers of 1/(1 - b0*x).

    The partitions that avoid the letter b_0 are grouped with a factor
    x^n / (1 - b0*x)^{m+k} each; the empty partition contributes
    1/(1 - b0*x)^m.  Exact to ``order``; equals power(g_from_b(b), m).
    """
    if not isinstance(m, int):
        raise TypeError("exponent must be an integer")
    base = Series([1, -b[0]], order=order)
    total = power(base, -m)
    for n2 in range(3, order + 1):
        for pt in odd_partitions(n2):
            if pt.exponents[0]:
                continue
            mono = pt.monomial_value(b)
            if not mono:
                continue
            value = b_coeff(pt)(m)
            if not value:
                continue
            tail = power(base, -(m + pt.k)).shift(n2).truncate(order)
            total = total + (value * mono) * tail
    return total


# -- generalized binomial series and tables --------------------------------


def binomial_series(r: int, m: "int | MuPoly", order: int) -> Series:
    """The r-th generalized binomial series raised to the power m.

    [x^n] = m/(m+rn) * C(m+rn, n), computed in the cancelled product form
    m * (m+rn-1) * ... * (m+rn-n+1) / n! which is defined for every integer
    m.  A MuPoly exponent gives the symbolic series.  r = 1 is the plain
    binomial, r = 2 with m = 1 the Catalan numbers.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    if isinstance(m, MuPoly):
        coeffs: list[MuPoly] = [MuPoly((1,))]
        for n2 in range(1, order + 1):
            acc = m
            for j in range(1, n2):
                acc = acc * (m + (r * n2 - j))
            coeffs.append(acc * Fraction(1, factorial(n2)))
        return Series(coeffs)
    if not isinstance(m, int):
        raise TypeError("power must be an integer or a MuPoly")
    out: list[Fraction] = [Fraction(1)]
    for n2 in range(1, order + 1):
        acc = Fraction(m)
        for j in range(1, n2):
            acc *= m + r * n2 - j
        out.append(acc / factorial(n2))
    return Series(out)


def pascal_table(r: int, rows: int, cols: int) -> list[list[Fraction]]:
    """Table of (m, n) values with (m, 0) = 1, (0, n) = 0 for n > 0 and
    (m, n) = (m-1, n) + (m+r-1, n-1); entry (m, n) equals [x^n] Bin_r^m.

    Returns ``rows`` rows for m = 0..rows-1, each with ``cols`` columns.
    Columns are built front to back with the extra height the recurrence
    reaches up for, so every returned entry is exact.
    """
    if r < 1 or rows < 1 or cols < 1:
        raise ValueError("r, rows and cols must be positive")
    height = rows + r * (cols - 1)
    col = [Fraction(1)] * height
    table_cols = [col[:rows]]
    for _ in range(1, cols):
        height -= r
        new = [Fraction(0)] * height
        for m2 in range(1, height):
            new[m2] = new[m2 - 1] + col[m2 + r - 1]
        table_cols.append(new[:rows])
        col = new
    return [[table_cols[n2][m2] for n2 in range(cols)] for m2 in range(rows)]


def symbolic_coefficient(a: Series, n: int) -> MuPoly:
    """[x^n] a^m as a polynomial in the exponent; needs constant term 1."""
    value = power(a.truncate(n) if n < a.order else a, MU)[n]
    assert isinstance(value, MuPoly)
    return value


# -- identity checks -------------------------------------------------------


def lagrange_check(g: Series, n: int) -> bool:
    """Lagrange inversion tie between powers of g and of its A-series.

    With l_n(m) = [x^n] g^m and lt_n(m) = [x^n] A^m the relation is
    l_n(m) = m/(m+n) * lt_n(m+n), checked as an exact polynomial identity.
    """
    if g[0] != 1:
        raise ValueError("requires g(0) = 1")
    ln = symbolic_coefficient(g, n)
    a = a_from_g(g)
    lt = symbolic_coefficient(a.series(n), n)
    shifted = lt(MuPoly((n, 1)))
    assert isinstance(shifted, MuPoly)
    try:
        quotient = (MU * shifted).divexact(MuPoly((n, 1)))
    except ValueError:
        return False
    return quotient == ln


def binomial_type_checks(g: Series, n: int) -> bool:
    """Three rewrites of [x^n] g^m against the direct symbolic coefficient.

    Letters [x^i] g with falling-factorial weights, letters [x^i] log g
    with plain power weights, and A-sequence letters with the partition
    coefficient polynomials; all three sums must agree exactly.
    """
    if g[0] != 1:
        raise ValueError("requires g(0) = 1")
    if n == 0:
        return symbolic_coefficient(g, 0) == MuPoly((1,))
    target = symbolic_coefficient(g, n)
    lg = log1(g.truncate(n) if n < g.order else g)
    a = a_from_g(g)

    s_g = MuPoly()
    s_log = MuPoly()
    s_a = MuPoly()
    for pt in all_partitions(n):
        q = pt.q
        denom = Fraction(1, pt.factorial_product())
        mono_g = Fraction(1)
        mono_l = Fraction(1)
        for j, mult in enumerate(pt.exponents):
            if mult:
                gj = g[j + 1]
                lj = lg[j + 1]
                assert isinstance(gj, Fraction) and isinstance(lj, Fraction)
                mono_g *= gj**mult
                mono_l *= lj**mult
        falling = MuPoly((1,))
        for t in range(q):
            falling = falling * (MU - t)
        if mono_g:
            s_g = s_g + falling * (denom * mono_g)
        if mono_l:
            s_log = s_log + (MU**q) * (denom * mono_l)
        mono_a = pt.monomial_value(a)
        if mono_a:
            s_a = s_a + a_coeff(pt) * mono_a
    return s_g == target and s_log == target and s_a == target


def _half_power_poly(q: int) -> MuPoly:
    """m * (m + q - 2) * (m + q - 4) * ... , q factors stepping by 2."""
    acc = MU
    for i in range(1, q):
        acc = acc * (MU + (q - 2 * i))
    return acc


def h_expansion_check(b: BSequence, n: int) -> bool:
    """Expansion of the odd factor h by half powers of g.

    (a) [x^n] h^m equals the odd-partition sum with weights
        p_q(m) / (prod m_i! * 2^q) * prod b_i^{m_i}, where p_q is the
        stepped product from ``_half_power_poly``;
    (b) per partition, 2m * p_q(2m+n) divided exactly by (2m+n) equals
        2^q * m * (m+k-1) * ... * (m+k-q+2), the B-side coefficient
        product scaled by 2^q.
    Both are exact polynomial identities.
    """
    if n < 1:
        raise ValueError("n must be positive")
    g = g_from_b(b, n)
    fact = factorize(g)
    lhs = symbolic_coefficient(fact.h, n)
    rhs = MuPoly()
    ok = True
    for pt in odd_partitions(n):
        q = pt.q
        k = pt.k
        pq = _half_power_poly(q)
        rhs = rhs + pq * (Fraction(1, pt.factorial_product() * 2**q) * pt.monomial_value(b))
        shifted = pq(MuPoly((n, 2)))
        assert isinstance(shifted, MuPoly)
        left = (MuPoly((0, 2)) * shifted).divexact(MuPoly((n, 2)))
        right = Fraction(2**q) * MU * _rising_from(k - 1, q - 1)
        if left != right:
            ok = False
    return ok and lhs == rhs


def two_letter_action_check(
    first: Fraction | int,
    second: Fraction | int,
    r: int,
    m: int,
    order: int,
    letters: str = "b",
) -> bool:
    """Closed action form of a two-letter sequence against the fixed point.

    letters="b": for B = (b0, 0, ..., 0, b_r), the series
    1/(1-b0*x)^m * Bin_{r+1}^m evaluated at b_r*x^(2r+1)/(1-b0*x)^(r+1)
    must equal g^m with g solved from B.  letters="a": for
    A = (1, a1, 0, ..., 0, a_r), the same with Bin_r at a_r*x^r/(1-a1*x)^r
    against the A-side fixed point.
    """
    first = Fraction(first)
    second = Fraction(second)
    base = Series([1, -first], order=order)
    f = power(base, -m)
    if letters == "b":
        if r < 1:
            raise ValueError("r must be at least 1")
        u = (second * power(base, -(r + 1))).shift(2 * r + 1).truncate(order)
        lhs = series_action(f, u, binomial_series(r + 1, m, order))
        rhs = power(g_from_b(BSequence([first] + [0] * (r - 1) + [second]), order), m)
    elif letters == "a":
        if r < 2:
            raise ValueError("r must be at least 2")
        u = (second * power(base, -r)).shift(r).truncate(order)
        lhs = series_action(f, u, binomial_series(r, m, order))
        rhs = power(g_from_a(ASequence([1, first] + [0] * (r - 2) + [second]), order), m)
    else:
        raise ValueError("letters must be 'b' or 'a'")
    return lhs == rhs
