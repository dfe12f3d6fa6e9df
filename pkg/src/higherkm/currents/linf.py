"""
L∞ algebras given by bracket callables, and a checker for the
generalized Jacobi identities.

Conventions are the unshifted ones: ℓ_k has degree 2 - k, is graded
antisymmetric, and for every n

    Σ_{i+j=n+1} Σ_{σ ∈ Sh(i, n-i)} χ(σ) (-1)^{i(j-1)}
        ℓ_j(ℓ_i(x_σ1, ..., x_σi), x_σ(i+1), ..., x_σn) = 0,

where χ(σ) is the sign of σ times the Koszul sign of permuting the x's.
"""

import random
from itertools import combinations

from ..core.signs import koszul_int, perm_sign
from ..core.linalg import vaxpy, vscale


def shuffles(n, i):
    """(i, n-i) unshuffles as permutations of range(n)."""
    for first in combinations(range(n), i):
        rest = [k for k in range(n) if k not in first]
        yield list(first) + rest


class LInfinityAlgebra:
    """
    brackets: {arity: f(*elements)}.  Elements must support +, scale(c)
    and is_zero(); ``degree`` returns the degree of a homogeneous element.
    ``sampler(rng, n, case)`` produces homogeneous test tuples of length n.
    """

    def __init__(self, brackets, degree, zero, sampler=None, name="",
                 central=None, basis=None):
        self.brackets = dict(brackets)
        self.degree = degree
        self.zero = zero
        self.sampler = sampler
        self.name = name
        self.central = central
        self.basis = basis

    @property
    def max_arity(self):
        return max(self.brackets) if self.brackets else 0

    def bracket(self, k, *xs):
        f = self.brackets.get(k)
        if f is None:
            return self.zero()
        return f(*xs)

    def jacobiator(self, xs):
        """Left side of the arity-n identity on the tuple xs."""
        n = len(xs)
        degs = [self.degree(x) for x in xs]
        total = self.zero()
        for i in range(1, n + 1):
            j = n + 1 - i
            if i not in self.brackets or j not in self.brackets:
                continue
            for sigma in shuffles(n, i):
                chi = perm_sign(sigma) * koszul_int(sigma, degs)
                sgn = chi * (-1 if (i * (j - 1)) % 2 else 1)
                inner = self.brackets[i](*[xs[s] for s in sigma[:i]])
                if inner.is_zero():
                    continue
                outer = self.brackets[j](inner, *[xs[s] for s in sigma[i:]])
                if outer.is_zero():
                    continue
                total = total + outer.scale(sgn)
        return total

    def antisymmetry_defect(self, k, xs):
        """ℓ_k(xs) compared with ℓ_k on the adjacent-swapped tuples."""
        base = self.brackets[k](*xs)
        degs = [self.degree(x) for x in xs]
        for p in range(k - 1):
            ys = list(xs)
            ys[p], ys[p + 1] = ys[p + 1], ys[p]
            sw = self.brackets[k](*ys)
            sgn = -1 if (degs[p] * degs[p + 1]) % 2 == 0 else 1
            diff = sw + base.scale(-sgn)
            if not diff.is_zero():
                return p
        return None


class CheckReport:
    def __init__(self):
        self.checked = 0
        self.failures = []
        self.by_arity = {}

    @property
    def passed(self):
        return not self.failures

    def __repr__(self):
        return "CheckReport(checked=%d, failures=%d)" % (self.checked, len(self.failures))


def check_l_infinity(L, samples, seed=0, arities=None, stop_at_first=True):
    """
    Evaluate the generalized Jacobi identities (and antisymmetry of the top
    bracket) on ``samples`` random tuples for each arity up to
    max_arity + 1.  The report lists the first violation with its tuple.
    """
    rng = random.Random(seed)
    rep = CheckReport()
    if arities is None:
        arities = range(1, L.max_arity + 2)
    if samples <= 0:
        return rep
    for n in arities:
        for s in range(samples):
            xs = L.sampler(rng, n, s)
            if xs is None:
                continue
            rep.checked += 1
            rep.by_arity[n] = rep.by_arity.get(n, 0) + 1
            j = L.jacobiator(xs)
            if not j.is_zero():
                rep.failures.append({"identity": "jacobi", "arity": n,
                                     "inputs": [str(x) for x in xs], "value": str(j)})
                if stop_at_first:
                    return rep
            if n in L.brackets and n >= 2:
                p = L.antisymmetry_defect(n, xs)
                if p is not None:
                    rep.failures.append({"identity": "antisymmetry", "arity": n,
                                         "position": p, "inputs": [str(x) for x in xs]})
                    if stop_at_first:
                        return rep
    return rep


# ---------------------------------------------------------------------------
# finite-dimensional L∞ algebras on a labelled graded basis

class Vec:
    """Sparse vector over a graded basis, with the element protocol above."""

    __slots__ = ("v", "space")

    def __init__(self, v, space):
        self.v = {k: c for k, c in v.items() if c}
        self.space = space

    def __add__(self, other):
        return Vec(vaxpy(dict(self.v), other.v), self.space)

    def scale(self, c):
        return Vec(vscale(self.v, c), self.space)

    def is_zero(self):
        return not self.v

    def __eq__(self, other):
        return isinstance(other, Vec) and self.v == other.v

    def __str__(self):
        if not self.v:
            return "0"
        return " + ".join("%s*%s" % (c, self.space.labels[k]) for k, c in sorted(self.v.items()))


class FiniteLInfinity(LInfinityAlgebra):
    """
    Basis labels with degrees; brackets on basis tuples given by
    {arity: f(i_1, ..., i_k) -> {index: coef}}, extended multilinearly.
    """

    def __init__(self, labels, degrees, basis_brackets, name="", central=None):
        self.labels = list(labels)
        self.degrees = list(degrees)
        self.basis_brackets = dict(basis_brackets)
        self._cache = {}
        brackets = {k: self._make(k) for k in self.basis_brackets}
        super().__init__(brackets, self._degree, lambda: Vec({}, self), self._sample,
                         name=name, central=central, basis=self.labels)

    def _basis_value(self, k, idx):
        key = (k, idx)
        r = self._cache.get(key)
        if r is None:
            r = {i: c for i, c in self.basis_brackets[k](*idx).items() if c}
            self._cache[key] = r
        return r

    def _make(self, k):
        def f(*xs):
            out = {}

            def rec(pos, idx, coef):
                if pos == k:
                    val = self._basis_value(k, tuple(idx))
                    if val:
                        vaxpy(out, val, coef)
                    return
                for i, c in xs[pos].v.items():
                    rec(pos + 1, idx + [i], coef * c)

            rec(0, [], 1)
            return Vec(out, self)
        return f

    def _degree(self, x):
        degs = {self.degrees[i] for i in x.v}
        if len(degs) > 1:
            raise ValueError("inhomogeneous element")
        return degs.pop() if degs else 0

    def vec(self, d):
        return Vec(d, self)

    def _sample(self, rng, n, case):
        out = []
        for _ in range(n):
            deg = rng.choice(sorted(set(self.degrees)))
            idx = [i for i, g in enumerate(self.degrees) if g == deg]
            v = {i: rng.randint(-3, 3) for i in rng.sample(idx, min(2, len(idx)))}
            out.append(Vec(v, self))
        return out


def lie_as_linf(g):
    """A Lie algebra in degree 0 as an L∞ algebra with only ℓ_2."""
    return FiniteLInfinity(g.labels, [0] * g.dim,
                           {2: lambda i, j: g.bracket_basis(i, j)}, name=g.name)


def string_lie2(g, form):
    """
    g ⊕ C·K with K in degree -1, ℓ_2 the bracket of g and
    ℓ_3(x, y, z) = form(x, [y, z])·K.
    """
    n = g.dim
    K = n

    def l2(i, j):
        if i == K or j == K:
            return {}
        return g.bracket_basis(i, j)

    def l3(i, j, k):
        if K in (i, j, k):
            return {}
        c = form({i: 1}, g.bracket({j: 1}, {k: 1}))
        return {K: c} if c else {}

    return FiniteLInfinity(list(g.labels) + ["K"], [0] * n + [-1], {2: l2, 3: l3},
                           name="string(%s)" % g.name, central=K)
