"""
Symmetric invariant forms on a Lie algebra.

A form of degree m is stored by its values on sorted tuples of basis
indices.  Polarizations carry 1/m! so that θ(X, ..., X) = tr(X^m) for
θ_{m,N}.
"""

from fractions import Fraction
from itertools import combinations_with_replacement, permutations, product
from math import factorial

from .lie import mat_mul, mat_trace, gl, FiniteLieAlgebra


class InvariantPolynomial:
    def __init__(self, lie, degree, values, name=""):
        self.lie = lie
        self.degree = degree
        self.values = {tuple(sorted(k)): v for k, v in values.items() if v}
        self.name = name

    def basis_value(self, idx):
        return self.values.get(tuple(sorted(idx)), 0)

    def __call__(self, *xs):
        """Multilinear evaluation on sparse vectors."""
        if len(xs) != self.degree:
            raise ValueError("expected %d arguments" % self.degree)
        total = 0
        items = [list(x.items()) for x in xs]
        for choice in product(*items):
            v = self.values.get(tuple(sorted(i for i, _ in choice)))
            if v:
                c = v
                for _, a in choice:
                    c = c * a
                total = total + c
        return total

    def diagonal(self, x):
        return self(*([x] * self.degree))

    def is_zero(self):
        return not self.values

    def scale(self, c):
        return InvariantPolynomial(self.lie, self.degree,
                                   {k: c * v for k, v in self.values.items()}, self.name)

    def __add__(self, other):
        vals = dict(self.values)
        for k, v in other.values.items():
            vals[k] = vals.get(k, 0) + v
        return InvariantPolynomial(self.lie, self.degree, vals)

    def __eq__(self, other):
        return (isinstance(other, InvariantPolynomial) and self.degree == other.degree
                and self.values == other.values)

    def __repr__(self):
        return "InvariantPolynomial(%s, degree=%d, %d values)" % (
            self.name, self.degree, len(self.values))


def check_invariance(theta, g=None):
    """Σ_i θ(x_1, ..., [y, x_i], ..., x_m) = 0 on all basis data."""
    g = g or theta.lie
    m = theta.degree
    for idx in combinations_with_replacement(range(g.dim), m):
        xs = [{i: 1} for i in idx]
        for y in range(g.dim):
            total = 0
            for pos in range(m):
                br = g.bracket({y: 1}, xs[pos])
                if br:
                    args = xs[:pos] + [br] + xs[pos + 1:]
                    total = total + theta(*args)
            if total:
                return False
    return True


def polarized_trace(mats, m, scale=1):
    """
    Values of (scale/m!) Σ_σ tr(M_σ1 ⋯ M_σm) on sorted index tuples, for a
    list of matrices indexed like a Lie algebra basis.
    """
    vals = {}
    n = len(mats)
    fm = factorial(m)
    for idx in combinations_with_replacement(range(n), m):
        s = 0
        for perm in set(permutations(idx)):
            p = mats[perm[0]]
            for i in perm[1:]:
                p = mat_mul(p, mats[i])
            s += mat_trace(p)
        # set(permutations) drops repeats; restore the full S_m count
        mult = fm // len(set(permutations(idx)))
        v = Fraction(s * mult) * scale / fm
        if v:
            vals[idx] = v
    return vals


def theta_kN(k, N):
    """θ_{k,N}(X_1, ..., X_k) = (1/k!) Σ_σ tr(X_σ(1) ⋯ X_σ(k)) on gl_N."""
    if k < 1 or N < 1:
        raise ValueError("k, N must be positive")
    g = gl(N)
    vals = {}
    basis = [(i, j) for i in range(N) for j in range(N)]
    fk = factorial(k)
    for idx in combinations_with_replacement(range(N * N), k):
        s = 0
        for perm in permutations(idx):
            # product of matrix units is E_{ab} iff the indices chain
            a, b = basis[perm[0]]
            ok = True
            for t in perm[1:]:
                c, e = basis[t]
                if c != b:
                    ok = False
                    break
                b = e
            if ok and a == b:
                s += 1
        if s:
            vals[idx] = Fraction(s, fk)
    return InvariantPolynomial(g, k, vals, name="theta_%d,%d" % (k, N))


def chern_character(rep, d):
    """
    ch_{d+1}(V) = (1/(d+1)!) Tr(ρ(X)^{d+1}), polarized with a further
    1/(d+1)!.
    """
    m = d + 1
    vals = polarized_trace(rep.mats, m, Fraction(1, factorial(m)))
    return InvariantPolynomial(rep.lie, m, vals, name="ch_%d(%s)" % (m, rep.name))


def killing_form(g):
    """κ(x, y) = tr(ad x ad y)."""
    mats = [g.ad_matrix(i) for i in range(g.dim)]
    vals = {}
    for i in range(g.dim):
        for j in range(i, g.dim):
            v = mat_trace(mat_mul(mats[i], mats[j]))
            if v:
                vals[(i, j)] = Fraction(v)
    return InvariantPolynomial(g, 2, vals, name="killing")


def trace_form(rep, m=2):
    """(1/m!) Σ_σ Tr(ρ(X_σ1)⋯ρ(X_σm))."""
    return InvariantPolynomial(rep.lie, m, polarized_trace(rep.mats, m),
                               name="trace_%d(%s)" % (m, rep.name))


def theta_by_name(name, g, d):
    """Resolve a CLI-style invariant polynomial name."""
    if name == "killing":
        return killing_form(g)
    if name.startswith("theta"):
        digits = name[5:]
        k, N = int(digits[0]), int(digits[1:])
        return theta_kN(k, N)
    if name == "trace":
        from .lie import builtin_rep
        return trace_form(builtin_rep(g, "fundamental"), d + 1)
    if name == "zero":
        return InvariantPolynomial(g, d + 1, {}, name="zero")
    raise KeyError("unknown invariant polynomial %r" % name)
