import random
from fractions import Fraction

from charfib.linalg import (Echelon, SparseMatrix, dense_rref, kernel_basis,
                            quotient_representatives, rank, solve)


def random_dense(rng, r, c, density=0.6):
    return [[Fraction(rng.randint(-4, 4), rng.randint(1, 3))
             if rng.random() < density else Fraction(0)
             for _ in range(c)] for _ in range(r)]


def test_rank_against_dense_oracle():
    rng = random.Random(7)
    for _ in range(220):
        r, c = rng.randint(0, 6), rng.randint(0, 6)
        data = random_dense(rng, r, c)
        m = SparseMatrix.from_dense(data)
        oracle_rank, _ = dense_rref(data)
        assert rank(m) == oracle_rank


def test_kernel_basis_spans_kernel():
    rng = random.Random(8)
    for _ in range(120):
        r, c = rng.randint(1, 5), rng.randint(1, 6)
        data = random_dense(rng, r, c)
        m = SparseMatrix.from_dense(data)
        ker = kernel_basis(m)
        assert len(ker) == c - rank(m)
        for v in ker:
            assert all(x == 0 for x in m.mul_vec(v))
        ech = Echelon()
        for v in ker:
            assert ech.add({i: x for i, x in enumerate(v) if x})
        assert ech.rank == len(ker)


def test_solve_roundtrip_and_inconsistency():
    rng = random.Random(9)
    solved = failed = 0
    while solved < 40 or failed < 10:
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        data = random_dense(rng, r, c)
        m = SparseMatrix.from_dense(data)
        b = [Fraction(rng.randint(-3, 3)) for _ in range(r)]
        x = solve(m, b)
        if x is None:
            failed += 1
            # b must lie outside the column span: appending it raises rank
            ech = Echelon()
            for j in range(c):
                ech.add({i: data[i][j] for i in range(r) if data[i][j]})
            assert ech.add({i: x for i, x in enumerate(b) if x})
        else:
            solved += 1
            assert m.mul_vec(x) == b


def test_echelon_membership():
    ech = Echelon()
    assert ech.add({0: Fraction(1), 1: Fraction(2)})
    assert not ech.add({0: Fraction(2), 1: Fraction(4)})
    assert ech.contains({0: Fraction(-3), 1: Fraction(-6)})
    assert not ech.contains({0: Fraction(1)})
    assert ech.rank == 1


def test_quotient_representatives():
    sub = [(Fraction(1), Fraction(0), Fraction(1))]
    reps = quotient_representatives(3, sub)
    assert len(reps) == 2
    big = Echelon()
    big.add({0: Fraction(1), 2: Fraction(1)})
    for v in reps:
        assert big.add({i: x for i, x in enumerate(v) if x})
    assert big.rank == 3
