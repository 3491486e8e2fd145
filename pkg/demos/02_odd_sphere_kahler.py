"""Odd-sphere fibers: kappa classes as exact Kaehler differentials.

For fiber S^m with m = 2k+1 the base ring is an exterior-polynomial
algebra Lambda(p_1..p_k, p_*^x, z) with d p_i = p_i^x z, and every kappa
class is the image of the derivation D with D(p_i) = dp_i on the module
of Kaehler differentials.  The script prints the exact-form dimensions
and the kappa classes of the Hirzebruch L-polynomials.
"""

from charfib.gca import format_element
from charfib.presets import odd_sphere
from charfib.tautrings import KahlerRing, l_kappa_readings

pl = odd_sphere(2)  # fiber S^5
B = pl.rm.base.cdga.algebra
print("base generators:",
      ", ".join(f"{g.name} (deg {g.degree})" for g in B.generators))
print()

K = KahlerRing(5, cutoff=24)
print("dimensions of the exact Kaehler forms d(Omega) by degree:")
print(" ", [K.exact_dimension(n) for n in range(25)])
print()

print("kappa classes of the L-polynomials (m = 5):")
for i in (1, 2):
    rd = l_kappa_readings(K, i)
    print(f"  kappa_L{i} = {format_element(rd['computed'])}"
          f"   (leading coefficient b_{i} = {rd['coefficient']})")
