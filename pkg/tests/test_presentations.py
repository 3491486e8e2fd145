from fractions import Fraction

from charfib.gca import FreeGCA, free_hilbert_series
from charfib.presentations import (FreeAmbient, QuotientAmbient,
                                   free_generating_certificate,
                                   ideal_membership, invariant_subring,
                                   is_regular_sequence, subring_presentation)


def test_subring_free_polynomial():
    A = FreeGCA([("x", 2), ("y", 2)])
    amb = FreeAmbient(A)
    pres = subring_presentation(
        amb, [("s", A.gen("x") + A.gen("y")), ("p", A.gen("x") * A.gen("y"))],
        cutoff=12)
    assert pres.is_free
    # elementary symmetric polynomials generate exactly the symmetric subring
    assert pres.hilbert == free_hilbert_series([(2, 0), (4, 0)], 12)
    assert not pres.equals_ambient


def test_subring_with_relation():
    A = FreeGCA([("x", 2)])
    amb = FreeAmbient(A)
    pres = subring_presentation(
        amb, [("u", A.gen("x") ** 2), ("v", A.gen("x") ** 3)], cutoff=16)
    assert not pres.is_free
    assert len(pres.relations) == 1
    rel = pres.relations[0]
    assert rel.degree() == 12  # u^3 - v^2


def test_invariant_subring_sign_flip():
    A = FreeGCA([("x", 2), ("y", 2)])
    pres = invariant_subring(A, {"x": 1, "y": -1}, cutoff=10)
    # invariants of y -> -y: generated by x and y^2
    assert pres.hilbert == free_hilbert_series([(2, 0), (4, 0)], 10)


def test_quotient_ambient_hilbert():
    A = FreeGCA([("x", 2)])
    q = QuotientAmbient(A, [A.gen("x") ** 3])
    assert q.hilbert(8) == [1, 0, 1, 0, 1, 0, 0, 0, 0]


def test_ideal_membership():
    A = FreeGCA([("x", 2), ("y", 2)])
    amb = FreeAmbient(A)
    gens = [A.gen("x") ** 2 - A.gen("y") ** 2]
    assert ideal_membership(amb, gens,
                            A.gen("x") ** 3 - A.gen("x") * A.gen("y") ** 2)
    assert not ideal_membership(amb, gens, A.gen("x") * A.gen("y"))


def test_regular_sequence():
    A = FreeGCA([("x", 2), ("y", 2)])
    amb = FreeAmbient(A)
    ok, _ = is_regular_sequence(amb, [A.gen("x"), A.gen("y")], cutoff=10)
    assert ok
    bad, _ = is_regular_sequence(
        amb, [A.gen("x") * A.gen("y"), A.gen("x") ** 2], cutoff=10)
    assert not bad


def test_free_generating_certificate():
    A = FreeGCA([("x", 2), ("y", 2)])
    ok, _ = free_generating_certificate(
        A, [("s", A.gen("x")), ("t", A.gen("y"))])
    assert ok
    # x, x (duplicate) cannot freely generate
    bad, _ = free_generating_certificate(
        A, [("s", A.gen("x")), ("t", A.gen("x"))])
    assert not bad
