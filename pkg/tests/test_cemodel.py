from charfib.cemodel import QuotientModel, simplify_total
from charfib.gca import Cdga, Derivation, FreeGCA, cohomology
from charfib.presets import cpn, even_sphere


def test_relative_model_even_sphere():
    pl = even_sphere(2)
    T = pl.rm.total
    x, y, a = (T.algebra.gen(n) for n in ("x", "y", "a"))
    assert (T.d(y) - (x ** 2 + a)).is_zero()
    # characteristic cochains are cocycles restricting to the input classes
    for name, c in pl.cochains.items():
        assert T.d(c).is_zero()
        assert (pl.rm.fiber_restriction(c)
                - pl.rm.xi_classes[name]).is_zero()


def test_relative_model_d_squared_degreewise():
    # d^2 = 0 on a monomial basis through a degree window, not just on
    # generators (cross-check of the Chevalley-Eilenberg construction)
    for pl in (even_sphere(2), cpn(2)):
        T = pl.rm.total
        for n in range(1, 16):
            for mono in T.algebra.monomials(n):
                e = T.algebra.monomial(mono)
                assert T.d(T.d(e)).is_zero()


def test_simplify_total_identity():
    pl = even_sphere(1)
    assert simplify_total(pl.rm.total, eliminate=None) is pl.rm.total
    assert simplify_total(pl.rm.total, eliminate=[]) is pl.rm.total


def test_simplify_total_contractible_pair():
    # (x2, y3; dy = x^2): eliminating y imposes x^2 = 0
    A = FreeGCA([("x", 2), ("y", 3)])
    cd = Cdga(A, Derivation(A, 1, {"y": A.gen("x") ** 2}))
    qm = simplify_total(cd, eliminate=["y"], cutoff=10)
    assert isinstance(qm, QuotientModel)
    assert qm.quotient.hilbert(6) == [1, 0, 1, 0, 0, 0, 0]
    H = cohomology(cd, 6)
    assert [H[n][0] for n in range(7)] == qm.quotient.hilbert(6)
