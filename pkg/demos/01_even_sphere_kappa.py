"""Even-sphere fibers: the kappa-class table and the tautological ring.

For the universal fibration with fiber S^{2k} and a fixed rank-2k bundle
restricting to the tangent bundle, the base ring is generated by the
holonomy classes a_* together with the Pontryagin/Euler duals.  Fiber
integration of powers of the characteristic cochains gives the kappa
classes; the script prints the low-degree table for S^4 and the
presentation of the ring they generate.
"""

from charfib.gca import format_element
from charfib.presets import even_sphere
from charfib.tautrings import kappa_ring, sphere_kappa_generators

pl = even_sphere(2)  # fiber S^4, structure group SO(4)
m = pl.fm

print("base ring generators:",
      ", ".join(f"{g.name} (deg {g.degree})" for g in m.base.generators))
print()

print("kappa-class table for S^4:")
F = None
for label, expr in [("p1", "p1"), ("e", "e")]:
    val = m.kappa(expr)
    print(f"  kappa_{label:6s} = {format_element(val)}")
e = m.resolve("e")
p1 = m.resolve("p1")
for label, total in [("e*p1", e * p1), ("e^2", e * e), ("e^3", e ** 3)]:
    print(f"  kappa_{label:6s} = {format_element(m.pushforward(total))}")
print()

pres = kappa_ring(m, sphere_kappa_generators(pl), cutoff=24)
print("tautological ring on kappa_{e p_i}, kappa_{p_i} (i >= r):")
print(f"  free polynomial ring: {pres.is_free}")
print(f"  equals the whole base ring: {pres.equals_ambient}")
print(f"  Hilbert series to 24: {pres.hilbert}")
