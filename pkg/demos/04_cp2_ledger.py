"""The CP^2 ledger: every pinned exact value in one report.

The real-tangent model over CP^2 with trivialized Euler difference has
base ring Q[a2, a3, p1_0, p1_1(odd)] and fiberwise classes expressed in
the coupling class.  The report recomputes each recorded value --
kappa-classes of p_1-powers and L-classes, the pd-classes, the invariant
ring, the principal ideal J, the quartic relation and the isometry-base
kernel -- and compares at exact rational equality.
"""

from charfib.tautrings import cp2_report

rep = cp2_report()
width = max(len(k) for k in rep)
for name, entry in rep.items():
    if name == "all_ok":
        continue
    status = "ok " if entry.get("ok", True) else "FAIL"
    val = entry.get("value", "")
    print(f"[{status}] {name:<{width}}  {val}")
print()
print("all entries match:", rep["all_ok"])
