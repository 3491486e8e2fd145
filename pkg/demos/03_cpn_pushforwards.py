"""Complex-projective fibers: the coupling class and pushforward ledger.

For fiber CP^n the total ring is base[omega] modulo a monic relation
omega^{n+1} + a_2 omega^{n-1} + ... + a_{n+1} = 0, where omega is the
coupling class (the unique lift of the Fubini-Study class with vanishing
integral of its (n+1)-st power).  Fiber integration reads off the
coefficient of omega^n; low pushforwards of omega powers recover the
a-classes modulo the square of the a-class ideal.
"""

from charfib.fibered import ideal_power_membership
from charfib.gca import format_element
from charfib.presentations import FreeAmbient
from charfib.presets import cpn

n = 3
pl = cpn(n, "point")
m = pl.fm
print(f"fiber CP^{n}; base generators:",
      ", ".join(g.name for g in m.base.generators))
print()

print("pushforwards of coupling-class powers:")
for k in range(n, 2 * n + 2):
    val = m.pushforward(pl.omega ** k)
    print(f"  pi_!(omega^{k}) = {format_element(val)}")
print()

amb = FreeAmbient(m.base)
a_ideal = [m.base.gen(g.name) for g in m.base.generators]
print("congruences pi_!(omega^{n+k}) = -a_k modulo (a)^2:")
for k in range(2, n + 2):
    val = m.pushforward(pl.omega ** (n + k)) + m.base.gen(f"a{k}")
    inside = ideal_power_membership(amb, a_ideal, val, power=2)
    print(f"  k = {k}: remainder in (a)^2: {inside}")
