"""
A universal cyclic cocycle and its matrix pullback
==================================================

Θ_d^∞ is a cyclic cocycle on A_d; pulling it back to gl_N(A_d) gives the
local cocycle of tr(X^{d+1}).
"""

import random

from higherkm.currents import gl, theta_kN, fhk_cocycle
from higherkm.currents.sphere import SphereSampler
from higherkm.homological import check_cyclic_cocycle, theta_infinity, ad_ops, lqt_pullback
from higherkm.homological.hochschild import ADTupleSampler

for d in (1, 2):
    ok, _ = check_cyclic_cocycle(theta_infinity(d), ad_ops(d), 20, seed=d,
                                 tuple_sampler=ADTupleSampler(d))
    print("Θ_%d^∞ cyclic cocycle:" % d, ok)

d, N = 2, 2
f = lqt_pullback(theta_infinity(d), N)
sampler, rng = SphereSampler(gl(N), d), random.Random(0)
agree = total = 0
while total < 20:
    xs = sampler.cocycle_tuple(rng)
    if xs is None:
        continue
    total += 1
    agree += f(*xs) == fhk_cocycle(theta_kN(d + 1, N), xs)
print("pullback = j(θ_{3,2}) on %d/%d tuples" % (agree, total))
