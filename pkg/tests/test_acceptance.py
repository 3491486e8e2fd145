"""Acceptance gate: the seven release criteria, at exact rational
arithmetic.

Each criterion is asserted through the named check suites (which hold the
pinned expected values) or directly.  One assertion is expected to fail:
the claim that the sign-invariant ring of the real-tangent model over CP^2
is a complete intersection on 3 relations.  The computed ring has 9
generators and 6 quadratic relations (the 2x2 minors), and its Hilbert
series differs from the complete-intersection bound, so the claim is kept
as a failing test rather than silently adjusted.
"""

import random
import time
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from charfib.checks import all_pass, disclosure_results, run_suite
from charfib.fibered import decompose
from charfib.gca import FreeGCA, free_hilbert_series
from charfib.linalg import SparseMatrix, dense_rref, rank
from charfib.lpoly import signature_check
from charfib.presentations import invariant_subring
from charfib.presets import cpn, even_sphere, odd_sphere
from conftest import random_algebra, random_element


def suite_ok(name, n=None):
    rows = run_suite(name, n=n)
    bad = [r["name"] for r in rows if r["check"] == "fail"]
    assert not bad, f"{name} (n={n}): failing checks {bad}"


# criterion 1: even spheres S^2, S^4, S^6, S^8 -------------------------------

def test_criterion_1_even_spheres():
    suite_ok("even-sphere")  # runs k = 1..4, kappa table + freeness to 40


# criterion 2: odd spheres S^3, S^5, S^7 -------------------------------------

def test_criterion_2_odd_spheres():
    suite_ok("odd-sphere")  # runs k = 1..3


# criterion 3: complex projective fibers, n = 2, 3, 4 ------------------------

def test_criterion_3_cpn_models_and_pushforwards():
    for n in (2, 3, 4):
        suite_ok("cpn", n=n)
        suite_ok("kappa-congruences", n=n)
        suite_ok("extended-kappa", n=n)
    for n in (2, 3):
        suite_ok("chern-kernel", n=n)


# criterion 4: invariant rings ------------------------------------------------

def test_criterion_4_invariant_ring_counts():
    suite_ok("invariant-ring")


def test_criterion_4_complete_intersection_claim():
    # Claimed: the invariant ring has 9 generators and 3 relations forming
    # a complete intersection.  The computation finds 6 relations, and the
    # complete-intersection Hilbert bound disagrees with the actual series,
    # so this assertion fails; it is kept to record the discrepancy.
    pl = cpn(2, "real")
    inv = invariant_subring(pl.fm.base, pl.involution, cutoff=24)
    assert len(inv.generators) == 9
    assert len(inv.relations) == 3, \
        (f"complete-intersection claim: expected 3 relations, "
         f"computed {len(inv.relations)}")


# criterion 5: the CP^2 ledger ------------------------------------------------

def test_criterion_5_cp2_ledger_within_budget():
    t0 = time.time()
    suite_ok("cp2-ledger")
    assert time.time() - t0 < 60


# criterion 6: fuzzing and oracles --------------------------------------------

def test_criterion_6_algebraic_law_fuzz():
    rng = random.Random(61)
    instances = 0
    # Koszul commutativity + associativity
    for _ in range(400):
        A = random_algebra(rng)
        a = random_element(rng, A, rng.randint(1, 6))
        b = random_element(rng, A, rng.randint(1, 6))
        c = random_element(rng, A, rng.randint(1, 6))
        assert ((a * b) * c - a * (b * c)).is_zero()
        if not (a.is_zero() or b.is_zero()):
            s = (-1) ** (a.degree() * b.degree())
            assert (a * b - A.scalar(Fraction(s)) * (b * a)).is_zero()
        instances += 1
    # d^2 = 0 and Leibniz on preset relative models
    for pl in (even_sphere(2), odd_sphere(2), cpn(2)):
        T = pl.rm.total
        for _ in range(120):
            n1, n2 = rng.randint(1, 8), rng.randint(1, 8)
            a = random_element(rng, T.algebra, n1)
            b = random_element(rng, T.algebra, n2)
            assert T.d(T.d(a)).is_zero()
            sign = (-1) ** n1
            assert (T.d(a * b) - (T.d(a) * b + sign * (a * T.d(b)))) \
                .is_zero()
            instances += 2
    # Jacobi on the twisted Lie models (validate sweeps all basis triples)
    for pl in (even_sphere(3), odd_sphere(3), cpn(3)):
        assert pl.lxi.validate() is None
        instances += pl.lxi.dim ** 3
    assert instances >= 1000


def test_criterion_6_oracle_matrices():
    rng = random.Random(62)
    for _ in range(210):
        r, c = rng.randint(0, 6), rng.randint(0, 6)
        data = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                 if rng.random() < 0.6 else Fraction(0)
                 for _ in range(c)] for _ in range(r)]
        oracle_rank, _ = dense_rref(data)
        assert rank(SparseMatrix.from_dense(data)) == oracle_rank


def test_criterion_6_decompose_reassemble():
    rng = random.Random(63)
    pl = cpn(3)
    m = pl.fm
    for _ in range(50):
        a = m.zero()
        for j in range(m.top + 1):
            a = a + m.from_base(
                random_element(rng, m.base, rng.choice([0, 2, 4]))) \
                * m.x_power(j)
        parts = decompose(m, a, pl.omega)  # asserts exact reassembly
        assert len(parts) == m.top + 1


@settings(max_examples=60, deadline=None)
@given(st.integers(-6, 6), st.integers(-6, 6), st.integers(0, 3),
       st.integers(0, 3))
def test_criterion_6_hypothesis_bilinearity(c1, c2, j1, j2):
    pl = cpn(2)
    m = pl.fm
    a = Fraction(c1) * m.x_power(j1)
    b = Fraction(c2) * m.x_power(j2)
    assert m.pushforward(a + b) == m.pushforward(a) + m.pushforward(b)


def test_criterion_6_signature():
    assert signature_check(1) == 1
    assert signature_check(2) == 1


# criterion 7: out-of-scale disclosure ----------------------------------------

def test_criterion_7_disclosure_rows():
    rows = disclosure_results()
    assert len(rows) == 3
    assert all(r["check"] == "n/a" for r in rows)
