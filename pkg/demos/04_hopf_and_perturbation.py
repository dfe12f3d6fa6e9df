"""
Factorization homology on a Hopf manifold, and the perturbation lemma
=====================================================================

The small model CE_*(g[α]) next to CE_*(g, Sym g), and one explicit
transfer of a perturbed differential.
"""

import random

from higherkm.core import cohomology_window
from higherkm.currents import sl2, gl, abelian
from higherkm.homological import (hopf_small_model, random_retraction, tensor_perturbation,
                                  perturb_retraction, verify_perturbation)

for g in (abelian(1), sl2(), gl(2)):
    res = hopf_small_model(g, 4)
    print("%-10s degree 0 per Sym-degree %s, cross-check %s" % (g.name, res.degree0(), res.cross_check))

rng = random.Random(3)
big, delta = tensor_perturbation(random_retraction(rng), rng)
res = perturb_retraction(big, delta)
print("nilpotency order", res.nilpotency_order)
print("identities", verify_perturbation(big, delta, res))
for K in (0, 1, 5):
    print("K=%d  big %s  small %s" % (K, cohomology_window(big.big.at(K)).dims,
                                      cohomology_window(res.small_complex_at(big.small.spaces, K)).dims))
