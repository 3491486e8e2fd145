"""Hirzebruch L-polynomials from the multiplicative sequence of x/tanh(x).

Everything is exact: the characteristic power series is computed as a
Fraction Taylor series in u = x^2, its logarithm is expanded, power sums are
converted to Pontryagin classes by Newton's identities, and the weighted
exponential reassembles the L-polynomials.  No coefficient is hardcoded.

The signature-theorem sanity check evaluates <L_k, [CP^{2k}]> = 1 using
p(CP^m) = (1 + w^2)^{m+1}.
"""

from fractions import Fraction
from math import comb, factorial

from .gca import Element, FreeGCA


def _series_mul(a, b, n):
    out = [Fraction(0)] * (n + 1)
    for i, x in enumerate(a):
        if i > n or not x:
            continue
        for j, y in enumerate(b):
            if i + j > n:
                break
            out[i + j] += x * y
    return out


def _series_div(num, den, n):
    assert den[0] != 0
    out = [Fraction(0)] * (n + 1)
    for i in range(n + 1):
        acc = num[i] if i < len(num) else Fraction(0)
        for j in range(1, i + 1):
            if j < len(den):
                acc -= den[j] * out[i - j]
        out[i] = acc / den[0]
    return out


def _series_log(a, n):
    """log of a series with a[0] = 1: log(1+s) = s - s^2/2 + ..."""
    assert a[0] == 1
    s = [Fraction(0)] + [Fraction(v) for v in a[1:n + 1]]
    s += [Fraction(0)] * (n + 1 - len(s))
    out = [Fraction(0)] * (n + 1)
    power = [Fraction(1)] + [Fraction(0)] * n
    for m in range(1, n + 1):
        power = _series_mul(power, s, n)
        sign = Fraction((-1) ** (m + 1), m)
        for i in range(n + 1):
            out[i] += sign * power[i]
    return out


def x_over_tanh(n):
    """Taylor coefficients of x/tanh(x) in u = x^2, degrees 0..n."""
    cosh = [Fraction(1, factorial(2 * k)) for k in range(n + 1)]
    sinh_over_x = [Fraction(1, factorial(2 * k + 1)) for k in range(n + 1)]
    return _series_div(cosh, sinh_over_x, n)


def _power_sums(algebra, n):
    """s_1..s_n in Q[p_1..p_n] via Newton's identities
    s_k = p_1 s_{k-1} - p_2 s_{k-2} + ... + (-1)^{k-1} k p_k."""
    def p(j):
        return algebra.gen(f"p_{j}") if 1 <= j <= n else algebra.zero()

    s = {}
    for k in range(1, n + 1):
        acc = ((-1) ** (k - 1)) * k * p(k)
        for j in range(1, k):
            acc = acc + ((-1) ** (j - 1)) * (p(j) * s[k - j])
        s[k] = acc
    return s


def _weighted_exp(algebra, elem, n):
    """exp of an element with zero weight-0 part, truncated at weight n
    (weight = degree / 4 in Q[p_*])."""
    assert elem.coefficient((0,) * algebra.ngens) == 0
    out = algebra.one()
    power = algebra.one()
    for m in range(1, n + 1):
        power = power * elem
        power = Element(algebra, {mono: c for mono, c in power.terms.items()
                                  if algebra.degree_of(mono) <= 4 * n})
        out = out + Fraction(1, factorial(m)) * power
    return out


def l_polynomials(n):
    """[L_1, ..., L_n] as Elements of Q[p_1..p_n] (|p_j| = 4j)."""
    A = FreeGCA([(f"p_{j}", 4 * j) for j in range(1, n + 1)])
    logq = _series_log(x_over_tanh(n), n)
    s = _power_sums(A, n)
    total = A.zero()
    for k in range(1, n + 1):
        if logq[k]:
            total = total + logq[k] * s[k]
    L = _weighted_exp(A, total, n)
    return [L.homogeneous_part(4 * i) for i in range(1, n + 1)]


def l_polynomial(i):
    """The i-th L-polynomial, e.g. L_1 = p_1/3, L_2 = (7 p_2 - p_1^2)/45."""
    assert i >= 1
    return l_polynomials(i)[i - 1]


def evaluate_at_roots(expr, roots):
    """Evaluate a polynomial in p_1..p_n at p_j = e_j(roots) (elementary
    symmetric).  Used as an independent oracle against the product formula
    prod_i Q(z_i)."""
    A = expr.algebra
    n = A.ngens
    e = [Fraction(1)] + [Fraction(0)] * n
    for z in roots:
        for j in range(n, 0, -1):
            e[j] = e[j] + Fraction(z) * e[j - 1]
    out = Fraction(0)
    for mono, c in expr.terms.items():
        val = c
        for j, exp in enumerate(mono):
            val *= e[j + 1] ** exp
        out += val
    return out


def signature_check(k):
    """<L_k, [CP^{2k}]> with p_j(CP^{2k}) = binom(2k+1, j) w^{2j}; the
    signature theorem forces the value 1."""
    L = l_polynomial(k)
    A = L.algebra
    # substitute p_j -> binom(2k+1, j) w^{2j}; every monomial of L_k lands
    # on w^{4k}, whose fundamental-class evaluation is 1
    total = Fraction(0)
    for mono, c in L.terms.items():
        val = c
        for j, exp in enumerate(mono):
            val *= Fraction(comb(2 * k + 1, j + 1)) ** exp
        total += val
    return total
