"""
Pullback of a cyclic cochain on A along the Loday-Quillen-Tsygan map to a
cochain on gl_N(A).

A gl_N(A) element is a SphereElement over gl(N), i.e. {E_ij index: a_ij}.
"""

from itertools import permutations, product
from math import factorial
from fractions import Fraction

from ..core.scalar import Scalar
from ..core.signs import perm_sign, koszul_int


def matrix_entries(X, N):
    """{(i, j): a_ij} for a SphereElement over gl(N)."""
    return {divmod(k, N): a for k, a in X.parts.items()}


def generalized_trace(theta, mats, N):
    """Σ_{i_0..i_m} Θ((X_0)_{i_0 i_1}, (X_1)_{i_1 i_2}, ..., (X_m)_{i_m i_0})."""
    m = len(mats)
    total = 0
    ent = mats
    for idx in product(range(N), repeat=m):
        args = []
        for k in range(m):
            a = ent[k].get((idx[k], idx[(k + 1) % m]))
            if a is None:
                break
            args.append(a)
        else:
            total = total + theta(*args)
    return total


def lqt_pullback(theta, N):
    """
    Returns f(X_0, ..., X_d) = (1/d!) Σ_{σ ∈ S_d} χ(σ) tr_Θ(X_0, X_σ(1), ..., X_σ(d)),
    χ the Koszul-signed sign of σ on the degrees of X_1..X_d.
    """
    m = theta.arity

    def f(*Xs):
        if len(Xs) != m:
            raise ValueError("expected %d arguments" % m)
        ents = [matrix_entries(X, N) for X in Xs]
        degs = [X.degree() for X in Xs]
        total = 0
        rest = list(range(1, m))
        for sigma in permutations(range(m - 1)):
            chi = perm_sign(list(sigma)) * koszul_int(list(sigma), degs[1:])
            order = [ents[0]] + [ents[rest[s]] for s in sigma]
            v = generalized_trace(theta, order, N)
            if v:
                total = total + v * chi
        return Scalar(total) / factorial(m - 1) if not isinstance(total, Scalar) \
            else total / factorial(m - 1)

    return f
