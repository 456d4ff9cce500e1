"""Reference implementations used to cross-check the library.

Everything here works on plain lists of Fractions (index = power of x) and
deliberately uses different algorithms than the package: direct convolution
loops, Lagrange-style reversion, layered coefficient recursions, brute-force
partition enumeration.  Slow but hard to get wrong.
"""

from fractions import Fraction
from math import factorial

from riordan import MU, MuPoly

# Coefficient pool for randomized tests: small exact rationals.
POOL = [Fraction(-2), Fraction(-1), Fraction(0), Fraction(1), Fraction(2),
        Fraction(1, 2)]


def conv(a, b, order):
    """Convolution of two coefficient lists, truncated at `order`."""
    out = []
    for n in range(order + 1):
        s = Fraction(0)
        for k in range(n + 1):
            if k < len(a) and n - k < len(b):
                s += Fraction(a[k]) * Fraction(b[n - k])
        out.append(s)
    return out


def list_inv(a, order):
    """Multiplicative inverse of a coefficient list, a[0] != 0."""
    a = [Fraction(c) for c in a] + [Fraction(0)] * (order + 1 - len(a))
    inv0 = Fraction(1) / a[0]
    out = [inv0]
    for n in range(1, order + 1):
        s = Fraction(0)
        for k in range(1, n + 1):
            s += a[k] * out[n - k]
        out.append(-inv0 * s)
    return out


def list_pow(a, e, order):
    """Integer power of a coefficient list (negative e via list_inv)."""
    if e < 0:
        return list_pow(list_inv(a, order), -e, order)
    out = [Fraction(1)]
    for _ in range(e):
        out = conv(out, a, order)
    return out


def list_compose(a, u, order):
    """a(u(x)) with u[0] = 0, by accumulating powers of u."""
    assert Fraction(u[0]) == 0
    out = [Fraction(0)] * (order + 1)
    upow = [Fraction(1)]
    for k in range(len(a)):
        if k > order:
            break
        for n in range(min(order, len(upow) - 1) + 1):
            out[n] += Fraction(a[k]) * upow[n]
        upow = conv(upow, u, order)
    return out


def lagrange_reversion(u, order):
    """Compositional inverse of u (u[0]=0, u[1]!=0) by Lagrange inversion.

    [x^n] v = (1/n) [x^{n-1}] (x/u)^n.
    """
    t = [Fraction(c) for c in u[1:]]  # u/x, constant term u[1]
    out = [Fraction(0), Fraction(0)]
    out[1] = Fraction(1) / t[0]
    for n in range(2, order + 1):
        p = list_pow(list_inv(t, order), n, order)
        out.append(p[n - 1] / n)
    return out[: order + 1]


def list_sqrt(a, order):
    """Square root with constant term 1: c_n from the convolution square."""
    a = [Fraction(c) for c in a] + [Fraction(0)] * (order + 1 - len(a))
    assert a[0] == 1
    out = [Fraction(1)]
    for n in range(1, order + 1):
        s = Fraction(0)
        for k in range(1, n):
            s += out[k] * out[n - k]
        out.append((a[n] - s) / 2)
    return out


def oracle_g_from_b(b, order):
    """Solve g = 1 + x*g*B(x^2*g) by list-level fixed-point iteration."""
    b = [Fraction(c) for c in b]
    g = [Fraction(1)] + [Fraction(0)] * order
    for _ in range(order + 1):
        x2g = [Fraction(0), Fraction(0)] + g[: order - 1]
        bEval = list_compose(b, x2g, order)
        xg = [Fraction(0)] + g[:order]
        rhs = conv(xg, bEval, order)
        rhs[0] += 1
        g = rhs
    return g


def oracle_g_from_a(a, order):
    """Solve g = A(x*g) by list-level fixed-point iteration."""
    a = [Fraction(c) for c in a]
    g = [Fraction(a[0])] + [Fraction(0)] * order
    for _ in range(order + 1):
        xg = [Fraction(0)] + g[:order]
        g = list_compose(a, xg, order)
    return g


def gm_coeff_from_b(b, n, m, memo=None):
    """[x^n] g^m for g defined by the B-sequence, via the layered recursion

        g_n^(m) = sum_r b_r * sum_{i=r+1}^{m+r} g_{n-1-2r}^(i),

    with g_0^(i) = 1 and g_n^(0) = 0 for n >= 1.  Requires m >= 0.
    """
    if memo is None:
        memo = {}
    if n == 0:
        return Fraction(1)
    if m == 0:
        return Fraction(0)
    key = (n, m)
    if key in memo:
        return memo[key]
    total = Fraction(0)
    for r in range(len(b)):
        if n - 1 - 2 * r < 0:
            break
        if b[r] == 0:
            continue
        inner = Fraction(0)
        for i in range(r + 1, m + r + 1):
            inner += gm_coeff_from_b(b, n - 1 - 2 * r, i, memo)
        total += Fraction(b[r]) * inner
    memo[key] = total
    return total


def gm_coeff_from_a(a, n, m, memo=None):
    """[x^n] g^m for g = A(x*g) with a[0] = 1, via

        g_n^(m) = sum_{r>=1} a_r * sum_{i=r}^{m+r-1} g_{n-r}^(i).
    """
    assert Fraction(a[0]) == 1
    if memo is None:
        memo = {}
    if n == 0:
        return Fraction(1)
    if m == 0:
        return Fraction(0)
    key = (n, m)
    if key in memo:
        return memo[key]
    total = Fraction(0)
    for r in range(1, len(a)):
        if n - r < 0:
            break
        if a[r] == 0:
            continue
        inner = Fraction(0)
        for i in range(r, m + r):
            inner += gm_coeff_from_a(a, n - r, i, memo)
        total += Fraction(a[r]) * inner
    memo[key] = total
    return total


def parts_odd(n):
    """All partitions of n into odd parts, as sorted tuples of parts."""
    result = []

    def rec(remaining, largest, acc):
        if remaining == 0:
            result.append(tuple(sorted(acc)))
            return
        part = min(largest, remaining)
        if part % 2 == 0:
            part -= 1
        while part >= 1:
            rec(remaining - part, part, acc + [part])
            part -= 2

    rec(n, n, [])
    return sorted(set(result))


def parts_all(n):
    """All partitions of n, as sorted tuples of parts."""
    result = []

    def rec(remaining, largest, acc):
        if remaining == 0:
            result.append(tuple(sorted(acc)))
            return
        for part in range(min(largest, remaining), 0, -1):
            rec(remaining - part, part, acc + [part])

    rec(n, n, [])
    return sorted(set(result))


def odd_exponent_vector(parts):
    """Exponent vector (multiplicity of part 2i+1 at index i) for odd parts."""
    top = max(parts)
    vec = [0] * ((top + 1) // 2)
    for p in parts:
        vec[(p - 1) // 2] += 1
    return tuple(vec)


def all_exponent_vector(parts):
    """Exponent vector (multiplicity of part j at index j-1)."""
    top = max(parts)
    vec = [0] * top
    for p in parts:
        vec[p - 1] += 1
    return tuple(vec)


def binom_in_mu(shift, j):
    """C(mu + shift, j) as a polynomial in mu."""
    out = MuPoly.const(Fraction(1, factorial(j)))
    for i in range(j):
        out = out * (MU + (shift - i))
    return out


def sym_pow_coeff(a, n):
    """[x^n] a(x)^mu as a MuPoly, via a^mu = sum_q C(mu,q) (a-1)^q.

    Independent of the exp/log route: only needs integer powers of a - 1,
    which has zero constant term, so the q-sum is finite.
    """
    assert Fraction(a[0]) == 1
    shifted = [Fraction(c) for c in a]
    shifted[0] = Fraction(0)
    out = MuPoly.const(0)
    qpow = [Fraction(1)]
    for q in range(n + 1):
        if n < len(qpow) and qpow[n] != 0:
            out = out + binom_in_mu(0, q) * qpow[n]
        qpow = conv(qpow, shifted, n)
    return out


def prefix_sum_poly(p):
    """Polynomial S with S(t) = sum_{i=1}^{t} p(i), via Newton differences.

    If p has degree d then S has degree d + 1; S is pinned down by its
    values at t = 0 .. d+2 and reassembled in the binomial basis C(t, j).
    """
    d = max(p.degree, 0)
    vals = []
    acc = Fraction(0)
    vals.append(acc)
    for i in range(1, d + 3):
        acc += p(Fraction(i))
        vals.append(acc)
    out = MuPoly.const(0)
    diffs = list(vals)
    for j in range(len(vals)):
        out = out + binom_in_mu(0, j) * diffs[0]
        diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
    return out
