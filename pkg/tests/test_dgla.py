import random
from fractions import Fraction

from charfib.dgla import DgLie, derivation_dgla
from charfib.gca import Cdga, Derivation, FreeGCA
from charfib.presets import even_sphere, odd_sphere


def _sl2_like():
    # abelian piece plus a differential pairing: d(b) = c
    return DgLie([("b", 3), ("c", 2)], diff={0: {1: Fraction(1)}},
                 brackets={})


def test_validate_accepts_good_dgla():
    assert _sl2_like().validate() is None


def test_validate_rejects_bad_differential():
    # d^2 != 0
    lie = DgLie([("a", 3), ("b", 2), ("c", 1)],
                diff={0: {1: Fraction(1)}, 1: {2: Fraction(1)}},
                brackets={})
    assert lie.validate() is not None


def test_validate_rejects_bad_jacobi():
    # [x,[x,y]] pairing that cannot close: cook a deliberately wrong table
    lie = DgLie([("x", 1), ("y", 1), ("z", 2)],
                brackets={(0, 1): {2: Fraction(1)},
                          (0, 2): {0: Fraction(1)}},
                diff={})
    assert lie.validate() is not None


def test_derivation_dgla_is_valid():
    A = FreeGCA([("x", 2), ("y", 3)])
    d = Derivation(A, 1, {"x": A.zero(), "y": A.gen("x") ** 2})
    cd = Cdga(A, d)
    lie, _ = derivation_dgla(cd, cap=6)
    assert lie.validate() is None
    assert lie.dim > 0


def test_preset_lie_models_validate():
    for pl in (even_sphere(2), odd_sphere(2)):
        assert pl.lxi.validate() is None
        assert pl.action.validate() is None


def test_jacobi_fuzz_on_preset_models():
    rng = random.Random(21)
    count = 0
    for pl in (even_sphere(3), odd_sphere(3)):
        lie = pl.lxi
        n = lie.dim
        for _ in range(200):
            def rv():
                return {rng.randrange(n): Fraction(rng.randint(-3, 3))
                        for _ in range(2)}
            u, v, w = rv(), rv(), rv()
            # graded Jacobi only makes sense on homogeneous slices; project
            for x in (u, v, w):
                degs = {lie.degrees[i] for i in x}
                if degs:
                    keep = min(degs)
                    for i in list(x):
                        if lie.degrees[i] != keep:
                            del x[i]
            du, dv, dw = (lie.degree_of_vector(x) if x else 0
                          for x in (u, v, w))
            lhs = lie.bracket(u, lie.bracket(v, w))
            t1 = lie.bracket(lie.bracket(u, v), w)
            t2 = {i: (-1) ** (du * dv) * c
                  for i, c in lie.bracket(v, lie.bracket(u, w)).items()}
            diff = dict(lhs)
            for term in (t1, t2):
                for i, c in term.items():
                    diff[i] = diff.get(i, 0) - c
            assert all(c == 0 for c in diff.values())
            count += 1
    assert count >= 400
