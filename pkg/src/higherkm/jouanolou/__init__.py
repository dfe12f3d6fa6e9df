"""The Jouanolou model A_d of functions on punctured affine space."""

from .element import ADElement, parse_element, format_element, divide_by_zzs
from .model import (WeightWindow, WindowTooSmall, UnstableWindow, bm_kernel,
                    bm_rational, residue, cohomology_ad, slice_cohomology,
                    slice_basis, random_element)


def normalize(d, terms, k):
    """Canonical form of Σ terms / (zz*)^k."""
    return ADElement(d, terms, k)


def check_membership(a, p, q):
    return a.in_A(p, q)
