"""Independent reference computations used by the tests."""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import comb, factorial

import numpy as np


def _ball_moment(a, d):
    """∫_B |z^a|^2 up to the common factor π^d."""
    num = 1
    for x in a:
        num *= factorial(x)
    return Fraction(num, factorial(sum(a) + d))


def sphere_pairing(omega):
    """
    ∫ over the unit sphere of a (d, d-1) form, via Stokes and ball moments:
    Σ_j (-1)^{j-1} Σ c [a = b - e_j] b_j a!/(|a|+d)!.  Defined up to a
    constant that cancels in ratios.
    """
    d = omega.d
    full = tuple(range(d))
    total = 0
    for (a, b, S, T), c in omega.terms.items():
        if tuple(S) != full or len(T) != d - 1:
            continue
        j = next(i for i in full if i not in T)
        bj = b[j]
        if not bj:
            continue
        if tuple(a) != tuple(b[i] - (1 if i == j else 0) for i in range(d)):
            continue
        total = total + c * ((-1) ** j * bj * _ball_moment(a, d))
    return total


def rank_by_minors(rows):
    """Rank of a small rational matrix as the size of its largest nonzero minor."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m or not m[0]:
        return 0
    nr, nc = len(m), len(m[0])

    def det(mat):
        n = len(mat)
        if n == 0:
            return Fraction(1)
        if n == 1:
            return mat[0][0]
        return sum((-1) ** j * mat[0][j] * det([r[:j] + r[j + 1:] for r in mat[1:]])
                   for j in range(n) if mat[0][j])
    for k in range(min(nr, nc), 0, -1):
        for rs in combinations(range(nr), k):
            for cs in combinations(range(nc), k):
                if det([[m[r][c] for c in cs] for r in rs]):
                    return k
    return 0


def bar_differential_truncated(n, arity):
    """
    b: C^{⊗arity} -> C^{⊗arity-1} for C[x]/(x^n) in degree 0, written out
    directly from b(a_0..a_k) = Σ (-1)^i ..a_i a_{i+1}.. + (-1)^k a_k a_0 ...
    Returns (rows, cols, dense matrix as list of lists).
    """
    from itertools import product
    cols = list(product(range(n), repeat=arity))
    rows = list(product(range(n), repeat=arity - 1))
    ridx = {r: i for i, r in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    k = arity - 1
    for ci, w in enumerate(cols):
        for i in range(k):
            e = w[i] + w[i + 1]
            if e < n:
                mat[ridx[w[:i] + (e,) + w[i + 2:]]][ci] += (-1) ** i
        e = w[k] + w[0]
        if e < n:
            mat[ridx[(e,) + w[1:k]]][ci] += (-1) ** k
    return rows, cols, mat


def coinvariants_dim(structure, s):
    """
    dim Sym^s(g)_g from structure constants c[i][j] = {k: c} using numpy:
    Sym^s / span of derivation images x_i · m.
    """
    n = len(structure)
    monos = list(combinations_with_replacement(range(n), s))
    idx = {m: i for i, m in enumerate(monos)}
    cols = []
    for x in range(n):
        for m in monos:
            v = np.zeros(len(monos))
            for p, i in enumerate(m):
                rest = m[:p] + m[p + 1:]
                for k, c in structure[x][i].items():
                    v[idx[tuple(sorted(rest + (k,)))]] += float(c)
            cols.append(v)
    if not cols:
        return len(monos)
    return len(monos) - int(np.linalg.matrix_rank(np.array(cols)))


def wheel_exact(d, eps, L):
    """
    Closed form of ∫_{[ε,L]^d} ε/(ε+Σt)^{d+1}: iterating ∫(c+t)^{-k-1} dt
    gives F(x) = (-1)^d ε/(d! x) and inclusion-exclusion over the bounds.
    """
    eps, L = Fraction(eps), Fraction(L)
    F = lambda x: Fraction((-1) ** d) * eps / (factorial(d) * x)
    return sum((-1) ** (d - j) * comb(d, j) * F(eps + j * L + (d - j) * eps) for j in range(d + 1))
