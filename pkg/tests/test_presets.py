import pytest

from charfib.gca import cohomology, free_hilbert_series
from charfib.presets import (check_holonomy, cp2_euler_trivial, cpn,
                             even_sphere, odd_sphere, odd_sphere_kill_model,
                             r_index)


def test_r_index():
    assert r_index(1) == 1
    assert r_index(2) == 2
    assert r_index(3) == 2
    assert r_index(4) == 3


@pytest.mark.parametrize("k", [1, 2, 3])
def test_even_sphere_builds(k):
    pl = even_sphere(k)
    assert pl.lxi.validate() is None
    assert check_holonomy(pl)
    # fiber S^{2k}: classes include the Euler class symbol
    assert "e" in pl.fm.classes


@pytest.mark.parametrize("k", [1, 2])
@pytest.mark.parametrize("style", ["p", "L"])
def test_odd_sphere_styles(k, style):
    pl = odd_sphere(k, style=style)
    assert pl.lxi.validate() is None
    assert check_holonomy(pl)


def test_odd_sphere_kill_model():
    cd, expected = odd_sphere_kill_model(1)
    cutoff = 20
    H = cohomology(cd, cutoff)
    dims = [H[n][0] for n in range(cutoff + 1)]
    degrees = [(e.degree(), 0) for e in expected.values()]
    assert dims == free_hilbert_series(degrees, cutoff)


@pytest.mark.parametrize("bundle", ["complex", "real", "point"])
def test_cpn_bundles(bundle):
    pl = cpn(2, bundle)
    assert pl.lxi.validate() is None
    assert pl.fm.top == 2
    if bundle == "complex":
        assert "c1" in pl.fm.classes
    elif bundle == "real":
        assert "p1" in pl.fm.classes and "e" in pl.fm.classes


def test_cp2_euler_trivial_classes():
    pl = cp2_euler_trivial()
    m = pl.fm
    # with the Euler difference trivialized, e(zeta) has no base-only term
    e = m.resolve("e")
    assert not e.is_zero()
    assert pl.involution


def test_kappa_shortcut():
    pl = even_sphere(2)
    assert pl.kappa("e") == pl.fm.base.scalar(2)
