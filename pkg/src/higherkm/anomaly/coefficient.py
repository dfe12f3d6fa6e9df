"""Θ_V = τ^{-d} j(ch_{d+1}(V)): the polynomial and its prefactor, kept apart."""

from ..core.scalar import Scalar
from ..currents.invariant import chern_character


def anomaly_coefficient(rep, d):
    """
    (ch_{d+1}(V), τ^{-d}).  The 1/(d+1)! inside the character is the wheel
    integral's limit; see ``wheel_integral`` for its numerical certificate.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    return chern_character(rep, d), Scalar.tau_power(-d)
