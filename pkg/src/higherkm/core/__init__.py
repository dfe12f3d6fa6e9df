"""Exact scalars, signs and sparse linear algebra."""

from .scalar import Scalar, ZERO, ONE, TAU, as_scalar, parse_scalar, format_scalar
from .signs import koszul_sign, koszul_int, perm_sign, sort_sign
from .linalg import (GradedSpaceWindow, SparseMatrix, Echelon, rank_kernel, rank,
                     solve, image_echelon, identity, vadd, vaxpy, vscale)
from .complexes import ChainComplexWindow, cohomology_window, ComplexError
