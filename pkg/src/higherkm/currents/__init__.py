"""Lie algebras, invariant polynomials, sphere algebras and their extensions."""

from .lie import (FiniteLieAlgebra, Representation, abelian, sl2, gl, gl_fundamental,
                  sl2_fundamental, abelian_weight_rep, trivial_rep, builtin, builtin_rep,
                  load_lie_json)
from .invariant import (InvariantPolynomial, check_invariance, theta_kN, chern_character,
                        killing_form, trace_form, theta_by_name)
from .linf import (LInfinityAlgebra, FiniteLInfinity, check_l_infinity, lie_as_linf,
                   string_lie2, CheckReport)
from .sphere import (SphereElement, fhk_cocycle, iterated_loop_cocycle, build_extension,
                     laurent_to_sphere, sphere_bracket, corrupt)
from .heisenberg import heisenberg, heisenberg_pairing, clifford_hh0, Clifford
from .freefield import free_field_level_d1, free_field_commutator, CutoffExceeded
