"""
The algebraic model of the punctured plane
==========================================

Cohomology of A_2 weight by weight, the Bochner-Martinelli element and
the residue it normalizes.
"""

from higherkm.jouanolou import (ADElement, WeightWindow, bm_kernel, residue, cohomology_ad,
                                format_element)

# H^{0,0} sees the polynomials z^a, H^{0,1} their mirror image with negative weights
dims = cohomology_ad(WeightWindow.cube(2, 2, 8, 5), 0, [0, 1])
for q in (0, 1):
    print("H^{0,%d}:" % q)
    for w2 in range(2, -3, -1):
        print("   ", " ".join(str(dims[(q, (w1, w2))]) for w1 in range(-2, 3)))

# the generator of H^{0,1}
bm = bm_kernel(2)
print("omega_BM =", format_element(bm))

# the residue pairs it with the holomorphic volume form and picks out f(0)
vol = ADElement.volume(2)
for a in [(0, 0), (1, 0), (0, 2)]:
    print("Res(z^%s omega_BM dz) =" % (a,), residue(ADElement.monomial(2, a=a) * bm * vol))
