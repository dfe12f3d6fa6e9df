"""CE, Hochschild and cyclic complexes, the LQT pullback, the perturbation lemma and the Hopf small model."""

from .ce import ce_complex, sym_monomials, coderivation, decalage_sign
from .hochschild import (TruncatedAlgebra, WindowOverflow, truncated_polynomial, ground_field,
                         exterior_algebra, matrix_algebra, hochschild_b, hochschild_window,
                         cyclic_quotient, CyclicCochain, check_cyclic_cocycle, theta_infinity,
                         ad_ops, truncated_ops)
from .lqt import lqt_pullback, generalized_trace
from .hpl import (GradedMap, KMap, Retraction, PerturbationResult, NotNilpotent,
                  perturb_retraction, verify_perturbation, random_retraction,
                  tensor_perturbation)
from .hopf import (hopf_small_model, HopfHomology, ce_with_sym_coefficients, current_algebra_alpha,
                   coinvariant_dim)
