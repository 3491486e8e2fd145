from fractions import Fraction

from charfib.lpoly import (evaluate_at_roots, l_polynomial, l_polynomials,
                           signature_check, x_over_tanh)


def test_series_x_over_tanh():
    # coefficients in u = x^2: x/tanh x = 1 + u/3 - u^2/45 + ...
    s = x_over_tanh(3)
    assert s[0] == 1
    assert s[1] == Fraction(1, 3)
    assert s[2] == Fraction(-1, 45)
    assert s[3] == Fraction(2, 945)


def test_first_l_polynomials():
    L1, L2, L3 = l_polynomials(3)
    A = L1.algebra
    p1 = A.gen("p_1")
    assert (L1 - Fraction(1, 3) * p1).is_zero()
    A2 = L2.algebra
    expect2 = (Fraction(7, 45) * A2.gen("p_2")
               - Fraction(1, 45) * A2.gen("p_1") ** 2)
    assert (L2 - expect2).is_zero()
    assert L3.degree() == 12
    M2 = l_polynomial(2)
    B = M2.algebra
    assert (M2 - (Fraction(7, 45) * B.gen("p_2")
                  - Fraction(1, 45) * B.gen("p_1") ** 2)).is_zero()


def test_evaluate_at_roots_multiplicativity():
    # L-series is multiplicative over Chern root collections
    L2 = l_polynomials(2)[1]
    r1 = [Fraction(1)]
    r2 = [Fraction(2)]
    both = r1 + r2
    # degree-8 parts combine: L(x+y) picks up cross terms
    v_both = evaluate_at_roots(L2, both)
    L1 = l_polynomials(1)[0]
    v_cross = (evaluate_at_roots(L1, r1) * evaluate_at_roots(L1, r2)
               + evaluate_at_roots(L2, r1) + evaluate_at_roots(L2, r2))
    assert v_both == v_cross


def test_signature_check():
    assert signature_check(1) == 1
    assert signature_check(2) == 1
