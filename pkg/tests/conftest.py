import random
from fractions import Fraction

import pytest

from charfib.gca import FreeGCA


@pytest.fixture
def rng():
    return random.Random(20260824)


def random_element(rng, algebra, degree, span=3):
    """Random homogeneous element of the given degree (possibly zero)."""
    monos = algebra.monomials(degree)
    out = algebra.zero()
    if not monos:
        return out
    for mono in rng.sample(monos, min(span, len(monos))):
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        out = out + algebra.monomial(mono) * algebra.scalar(c)
    return out


def random_algebra(rng, max_gens=4, max_degree=5):
    n = rng.randint(1, max_gens)
    return FreeGCA([(f"g{i}", rng.randint(1, max_degree))
                    for i in range(n)])
