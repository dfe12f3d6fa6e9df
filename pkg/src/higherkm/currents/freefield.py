"""
Free-field currents for d = 1 in a truncated mode Weyl algebra.

Generators b^(i)_k, c^(i)_k with [c^(i)_l, b^(j)_k] = δ_ij δ_{k+l,0}.
Currents J_m(x) = Σ_k :b^(i)_{-k} ρ(x)_ij c^(j)_{m+k}:.  The vacuum
annihilated by c_k for k <= 0 and b_k for k < 0 is used; the opposite
assignment flips the sign of the central term (see ``vacuum``).
"""

from fractions import Fraction

from ..core.linalg import vaxpy


class CutoffExceeded(ValueError):
    pass


class ModeWeylAlgebra:
    """
    Elements are {monomial: coef}; a monomial is a sorted tuple of
    generators (kind, i, k) with creators first.  Everything is bosonic,
    so ordering inside the creator block and the annihilator block is free.
    """

    def __init__(self, dim, cutoff, vacuum="positive"):
        self.dim = dim
        self.cutoff = cutoff
        self.vacuum = vacuum

    def annihilates(self, g):
        kind, _, k = g
        if self.vacuum == "positive":
            return k <= 0 if kind == "c" else k < 0
        return k > 0 if kind == "c" else k >= 0

    @staticmethod
    def bracket_gen(a, b):
        """[a, b] for generators."""
        ka, ia, ma = a
        kb, ib, mb = b
        if ia != ib or ma + mb != 0 or ka == kb:
            return 0
        return 1 if ka == "c" else -1

    def normal(self, gens):
        """Split a list of generators into a normally ordered monomial."""
        cr = sorted(g for g in gens if not self.annihilates(g))
        an = sorted(g for g in gens if self.annihilates(g))
        return tuple(cr), tuple(an)

    def mul_mono(self, m1, m2):
        """(C1 A1)(C2 A2) via Wick contractions between A1 and C2."""
        C1, A1 = m1
        C2, A2 = m2
        out = {}

        def rec(a_left, c_rest, coef):
            if not a_left:
                cr = tuple(sorted(C1 + c_rest))
                an = tuple(sorted(A1_kept + list(A2)))
                key = (cr, an)
                v = out.get(key, 0) + coef
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
                return
            a = a_left[-1]
            # a passes all remaining creators; it may contract with one
            A1_kept.insert(0, a)
            rec(a_left[:-1], c_rest, coef)
            A1_kept.pop(0)
            for p, c in enumerate(c_rest):
                v = self.bracket_gen(a, c)
                if v:
                    rec(a_left[:-1], c_rest[:p] + c_rest[p + 1:], coef * v)

        A1_kept = []
        rec(list(A1), tuple(C2), 1)
        return out

    def mul(self, x, y):
        out = {}
        for m1, a in x.items():
            for m2, b in y.items():
                vaxpy(out, self.mul_mono(m1, m2), a * b)
        return out

    def commutator(self, x, y):
        r = self.mul(x, y)
        vaxpy(r, self.mul(y, x), -1)
        return r

    def current(self, mat, m):
        """J_m for the matrix ρ(x)."""
        out = {}
        N = self.cutoff
        for k in range(-N, N + 1):
            if abs(m + k) > N:
                continue
            for i in range(self.dim):
                for j in range(self.dim):
                    c = mat[i][j]
                    if not c:
                        continue
                    key = self.normal([("b", i, -k), ("c", j, m + k)])
                    out[key] = out.get(key, 0) + c
        return {k: v for k, v in out.items() if v}


def _max_mode(mono):
    return max((abs(g[2]) for part in mono for g in part), default=0)


def free_field_commutator(rep, m, n, x, y, cutoff, vacuum="positive"):
    """
    Returns (central coefficient, non-central discrepancy) of
    [J_m(x), J_n(y)] - J_{m+n}([x, y]); the discrepancy is restricted to
    monomials with all modes below cutoff - |m| - |n|.
    """
    if 2 * max(abs(m), abs(n)) > cutoff or abs(m + n) > cutoff:
        raise CutoffExceeded("modes %d, %d need cutoff >= %d" % (m, n, 2 * max(abs(m), abs(n))))
    if isinstance(x, int):
        x = {x: 1}
    if isinstance(y, int):
        y = {y: 1}
    W = ModeWeylAlgebra(rep.dim, cutoff, vacuum)
    g = rep.lie
    Jx = W.current(rep.matrix(x), m)
    Jy = W.current(rep.matrix(y), n)
    lhs = W.commutator(Jx, Jy)
    rhs = W.current(rep.matrix(g.bracket(x, y)), m + n)
    vaxpy(lhs, rhs, -1)
    central = lhs.pop(((), ()), 0)
    bound = cutoff - abs(m) - abs(n)
    discrepancy = {k: v for k, v in lhs.items() if _max_mode(k) <= bound}
    return Fraction(central), discrepancy


def free_field_level_d1(rep, m, n, x, y, cutoff, vacuum="positive"):
    """Central coefficient of [J_m(x), J_n(y)] - J_{m+n}([x, y])."""
    return free_field_commutator(rep, m, n, x, y, cutoff, vacuum)[0]
