"""
Higher Kac-Moody extensions
===========================

The central extension of A_d ⊗ g by the local cocycle of an invariant
polynomial, checked as an L∞ algebra on random tuples.
"""

from higherkm.core import format_scalar
from higherkm.currents import (sl2, gl, killing_form, theta_kN, build_extension, check_l_infinity,
                               corrupt, fhk_cocycle, laurent_to_sphere)

# in d = 1 the cocycle is the affine one, with a factor -τ
k = killing_form(sl2())
e2, f_2 = laurent_to_sphere({0: {2: 1}}), laurent_to_sphere({2: {-2: 1}})
print("Θ(e z^2, f z^-2) =", format_scalar(fhk_cocycle(k, [e2, f_2])))

# in d = 2 the extension by θ_{3,2} on gl_2 is an L∞ algebra with a ternary bracket
L = build_extension(gl(2), theta_kN(3, 2), 2)
rep = check_l_infinity(L, 100, seed=0)
print("gl2, d=2:", "passes" if rep.passed else "fails", "on", rep.checked, "tuples", rep.by_arity)

# changing one value of θ breaks the relations and the checker says where
bad = check_l_infinity(build_extension(gl(2), corrupt(theta_kN(3, 2), (0, 0, 3)), 2), 100,
                       arities=[4])
print("corrupted θ detected:", not bad.passed, "first witness arity", bad.failures[0]["arity"])
