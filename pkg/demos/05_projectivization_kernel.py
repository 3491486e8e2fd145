"""The kernel of the comparison map to projectivized vector bundles.

Sending each a-class and difference class of the CP^n model to its value
on the projectivization of a rank-(n+1) complex bundle defines a ring map
into Q[c_1..c_{n+1}].  Its kernel is computed degreewise by exact linear
algebra and compared with the closed-form candidate ideal.
"""

from charfib.gca import format_element
from charfib.tautrings import (ideals_equal, projectivization_kernel_data,
                               ring_map_kernel)

for n in (2, 3):
    source, images, target, candidate = projectivization_kernel_data(n)
    kernel = ring_map_kernel(source, images, target, cutoff=16)
    eq, _ = ideals_equal(source, kernel, candidate, cutoff=16)
    print(f"CP^{n}: computed kernel generators ({len(kernel)}):")
    for g in kernel:
        print("   ", format_element(g))
    print(f"  equals the closed-form ideal: {eq}")
    print()
