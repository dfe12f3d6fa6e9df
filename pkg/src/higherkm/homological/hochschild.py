"""
Hochschild and cyclic complexes of truncated graded algebras, cyclic
cochains, and the universal cochain Θ_d^∞ on A_d.

Chains of arity n+1 sit in cohomological degree -n.  The cyclic operator
is t(a_0 ⊗ ⋯ ⊗ a_n) = (-1)^{n + |a_n|(|a_0|+⋯+|a_{n-1}|)} a_n ⊗ a_0 ⊗ ⋯ ⊗ a_{n-1}.
"""

from fractions import Fraction
from itertools import product
import random

from ..core.linalg import GradedSpaceWindow, SparseMatrix, vaxpy
from ..core.complexes import ChainComplexWindow
from ..core.scalar import Scalar
from ..jouanolou.model import residue, random_element, slice_basis


class WindowOverflow(ValueError):
    """A product left the truncated algebra."""


class TruncatedAlgebra:
    """
    Finite basis with a product table.  ``mul(i, j)`` returns {k: c}, or
    None when the product leaves the window.
    """

    def __init__(self, labels, mul, degrees=None, unit=None, name=""):
        self.labels = list(labels)
        self.n = len(self.labels)
        self._mul = mul
        self.degrees = list(degrees) if degrees is not None else [0] * self.n
        self.unit = unit
        self.name = name

    def mul(self, i, j):
        r = self._mul(i, j)
        if r is None:
            raise WindowOverflow("%s · %s leaves %s" % (self.labels[i], self.labels[j], self.name))
        return {k: c for k, c in r.items() if c}

    def mul_vec(self, x, y):
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                vaxpy(out, self.mul(i, j), a * b)
        return out

    def check_associative(self):
        for i in range(self.n):
            for j in range(self.n):
                for k in range(self.n):
                    l = self.mul_vec(self.mul(i, j), {k: 1})
                    r = self.mul_vec({i: 1}, self.mul(j, k))
                    if l != r:
                        return False
        return True


def truncated_polynomial(n, degree=0):
    """C[x]/(x^n) with x in the given degree (nilpotent, unit at index 0)."""
    def mul(i, j):
        return {i + j: 1} if i + j < n else {}
    return TruncatedAlgebra(["x^%d" % i for i in range(n)], mul,
                            [i * degree for i in range(n)], unit=0, name="C[x]/(x^%d)" % n)


def ground_field():
    return TruncatedAlgebra(["1"], lambda i, j: {0: 1}, unit=0, name="C")


def exterior_algebra(n):
    """Λ(e_1..e_n) with odd generators."""
    from itertools import combinations
    from ..core.signs import sort_sign
    basis = [S for k in range(n + 1) for S in combinations(range(n), k)]
    idx = {S: i for i, S in enumerate(basis)}

    def mul(i, j):
        S, T = basis[i], basis[j]
        s = sort_sign(list(S + T))
        if not s:
            return {}
        return {idx[tuple(sorted(S + T))]: s}
    return TruncatedAlgebra(["e" + "".join(str(x + 1) for x in S) if S else "1" for S in basis],
                            mul, [len(S) for S in basis], unit=0, name="Λ(%d)" % n)


def matrix_algebra(N):
    """M_N(C) with matrix-unit basis."""
    def mul(a, b):
        i, j = divmod(a, N)
        k, l = divmod(b, N)
        return {i * N + l: 1} if j == k else {}
    return TruncatedAlgebra(["E%d%d" % (i + 1, j + 1) for i in range(N) for j in range(N)],
                            mul, unit=None, name="M_%d" % N)


# ---------------------------------------------------------------------------
# signs on tensors

def cyclic_sign(degs):
    """Sign of t on a tensor with factor degrees degs (arity n+1)."""
    n = len(degs) - 1
    e = n + degs[-1] * sum(degs[:-1])
    return -1 if e % 2 else 1


def hochschild_b(alg, word):
    """b on a basis tensor (tuple of indices); returns {word: coef}."""
    n = len(word) - 1
    degs = [alg.degrees[i] for i in word]
    out = {}
    for i in range(n):
        prod_ = alg.mul(word[i], word[i + 1])
        s = -1 if i % 2 else 1
        for k, c in prod_.items():
            key = word[:i] + (k,) + word[i + 2:]
            v = out.get(key, 0) + s * c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    if n >= 1:
        s = cyclic_sign(degs)
        prod_ = alg.mul(word[-1], word[0])
        for k, c in prod_.items():
            key = (k,) + word[1:-1]
            v = out.get(key, 0) + s * c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


def _words(alg, arity, normalized):
    rest = [i for i in range(alg.n) if not (normalized and i == alg.unit)]
    return [w for w in product(range(alg.n), *([rest] * (arity - 1)))]


def _drop_unit(vec, alg, normalized):
    if not normalized or alg.unit is None:
        return vec
    return {w: c for w, c in vec.items() if alg.unit not in w[1:]}


def hochschild_window(alg, arity_cutoff, normalized=False, reduced=False):
    """
    Hochschild chains of arity 1..arity_cutoff.  ``normalized`` uses
    A ⊗ Ā^{⊗n}; ``reduced`` additionally quotients the ground field out of
    degree 0.
    """
    if reduced:
        normalized = True
    spaces, words = {}, {}
    for ar in range(1, arity_cutoff + 1):
        ws = _words(alg, ar, normalized)
        if reduced and ar == 1 and alg.unit is not None:
            ws = [w for w in ws if w[0] != alg.unit]
        words[-(ar - 1)] = ws
        spaces[-(ar - 1)] = GradedSpaceWindow(ws, -(ar - 1), name="C_%d" % (ar - 1))
    d = {}
    for deg, sp in spaces.items():
        tgt = spaces.get(deg + 1, GradedSpaceWindow([]))
        cols = {}
        for w in sp:
            img = _drop_unit(hochschild_b(alg, w), alg, normalized) if len(w) > 1 else {}
            if reduced and alg.unit is not None:
                img = {k: c for k, c in img.items() if not (len(k) == 1 and k[0] == alg.unit)}
            cols[w] = img
        d[deg] = SparseMatrix(tgt, sp, columns=cols)
    return ChainComplexWindow(spaces, d, complete_below=False, complete_above=True,
                              name="Hoch(%s)" % alg.name)


def rotate(alg, word):
    """(sign, t(word))."""
    degs = [alg.degrees[i] for i in word]
    return cyclic_sign(degs), (word[-1],) + word[:-1]


def cyclic_class(alg, word):
    """
    Canonical representative of the orbit of word under t, with the sign
    relating them, or (0, None) when the orbit kills the word.
    """
    sign, cur = 1, word
    seen = {}
    for _ in range(len(word)):
        if cur in seen:
            break
        seen[cur] = sign
        s, cur = rotate(alg, cur)
        sign *= s
    if cur == word and sign == -1:
        return 0, None
    rep = min(seen)
    # word = seen[rep]^{-1}-twisted: t^k word = seen[rep]·rep
    return seen[rep], rep


def cyclic_quotient(alg, arity_cutoff):
    """Connes' complex C_n/(1 - t) with the induced Hochschild b."""
    spaces = {}
    for ar in range(1, arity_cutoff + 1):
        reps = set()
        for w in _words(alg, ar, False):
            s, r = cyclic_class(alg, w)
            if s:
                reps.add(r)
        spaces[-(ar - 1)] = GradedSpaceWindow(sorted(reps), -(ar - 1), name="C^λ_%d" % (ar - 1))
    d = {}
    for deg, sp in spaces.items():
        tgt = spaces.get(deg + 1, GradedSpaceWindow([]))
        cols = {}
        for w in sp:
            img = {}
            if len(w) > 1:
                for k, c in hochschild_b(alg, w).items():
                    s, r = cyclic_class(alg, k)
                    if s:
                        vaxpy(img, {r: s * c})
            cols[w] = img
        d[deg] = SparseMatrix(tgt, sp, columns=cols)
    return ChainComplexWindow(spaces, d, complete_below=False, complete_above=True,
                              name="Cyc(%s)" % alg.name)


# ---------------------------------------------------------------------------
# cyclic cochains

class CyclicCochain:
    """
    Multilinear functional of a fixed arity.  ``func`` takes algebra
    elements; ``degree`` gives their degrees (for the cyclic sign).
    """

    def __init__(self, arity, func, degree, name=""):
        self.arity = arity
        self.func = func
        self.degree = degree
        self.name = name

    def __call__(self, *xs):
        return self.func(*xs)

    @classmethod
    def from_values(cls, alg, arity, values, name=""):
        """Cochain on a TruncatedAlgebra from its values on basis words."""
        def func(*xs):
            total = 0
            for choice in product(*[list(x.items()) for x in xs]):
                v = values.get(tuple(i for i, _ in choice))
                if v:
                    c = v
                    for _, a in choice:
                        c = c * a
                    total = total + c
            return total

        def degree(x):
            ds = {alg.degrees[i] for i in x}
            return ds.pop() if len(ds) == 1 else 0

        ch = cls(arity, func, degree, name)
        ch.alg = alg
        ch.values = values
        return ch


class AlgebraOps:
    """Element-level operations used by the cocycle checker."""

    def __init__(self, mul, add, scale, degree, sample, dbar=None, zero=None):
        self.mul = mul
        self.add = add
        self.scale = scale
        self.degree = degree
        self.sample = sample
        self.dbar = dbar
        self.zero = zero


def truncated_ops(alg, rng_terms=2):
    def sample(rng, k=None):
        deg = rng.choice(sorted(set(alg.degrees)))
        idx = [i for i in range(alg.n) if alg.degrees[i] == deg]
        return {i: rng.randint(-3, 3) or 1 for i in rng.sample(idx, min(rng_terms, len(idx)))}
    return AlgebraOps(alg.mul_vec, lambda x, y: vaxpy(dict(x), y), lambda x, c: {k: c * v for k, v in x.items()},
                      lambda x: {alg.degrees[i] for i in x}.pop() if x else 0, sample)


def _is_zero(v):
    if isinstance(v, (int, Fraction)):
        return v == 0
    return not v


def check_cyclic_cocycle(theta, ops, samples, seed=0, tuple_sampler=None):
    """
    On random tuples verify cyclic invariance Θ∘t = Θ, Hochschild
    closedness Θ∘b = 0 and, for dg inputs, Σ ± Θ(.., dbar a_i, ..) = 0.
    Returns (ok, first failure or None).
    """
    rng = random.Random(seed)
    m = theta.arity
    for s in range(samples):
        # cyclic invariance on arity m
        xs = tuple_sampler(rng, m, "cyclic") if tuple_sampler else [ops.sample(rng) for _ in range(m)]
        if xs is None:
            continue
        degs = [ops.degree(x) for x in xs]
        lhs = theta(*([xs[-1]] + list(xs[:-1])))
        rhs = theta(*xs) * cyclic_sign(degs)
        if not _is_zero(lhs - rhs):
            return False, {"check": "cyclic", "sample": s}
        # Hochschild closedness on arity m+1
        ys = tuple_sampler(rng, m + 1, "hochschild") if tuple_sampler else \
            [ops.sample(rng) for _ in range(m + 1)]
        if ys is None:
            continue
        degs = [ops.degree(y) for y in ys]
        total = 0
        for i in range(m):
            prod_ = ops.mul(ys[i], ys[i + 1])
            args = list(ys[:i]) + [prod_] + list(ys[i + 2:])
            total = total + theta(*args) * (-1 if i % 2 else 1)
        prod_ = ops.mul(ys[-1], ys[0])
        total = total + theta(*([prod_] + list(ys[1:-1]))) * cyclic_sign(degs)
        if not _is_zero(total):
            return False, {"check": "hochschild", "sample": s}
        # compatibility with the internal differential
        if ops.dbar is not None:
            zs = tuple_sampler(rng, m, "dbar") if tuple_sampler else \
                [ops.sample(rng) for _ in range(m)]
            if zs is None:
                continue
            degs = [ops.degree(z) for z in zs]
            total = 0
            acc = 0
            for i in range(m):
                args = list(zs[:i]) + [ops.dbar(zs[i])] + list(zs[i + 1:])
                total = total + theta(*args) * (-1 if acc % 2 else 1)
                acc += degs[i]
            if not _is_zero(total):
                return False, {"check": "differential", "sample": s}
    return True, None


# ---------------------------------------------------------------------------
# Θ_d^∞ on A_d

def theta_infinity(d, window=None):
    """Θ_d^∞(a_0, ..., a_d) = Res(a_0 ∂a_1 ⋯ ∂a_d) on A_d^{0,*}."""
    def func(*xs):
        if len(xs) != d + 1:
            raise ValueError("Θ_d^∞ takes d+1 arguments")
        prod_ = xs[0]
        for a in xs[1:]:
            prod_ = prod_ * a.del_()
            if prod_.is_zero():
                return Scalar(0)
        return residue(prod_.component(d, d - 1), window)
    return CyclicCochain(d + 1, func, lambda a: a.degree(), name="Theta_%d^inf" % d)


class ADTupleSampler:
    """Tuples in A_d^{0,*} biased so that Θ_d^∞ can be nonzero."""

    def __init__(self, d, weight_range=2):
        self.d = d
        self.wr = weight_range

    def element(self, rng, q, w):
        d = self.d
        kmin = max(0, -sum(w), q)
        for _ in range(6):
            K = kmin + rng.randint(0, 1)
            if slice_basis(d, tuple(w), 0, q, K):
                a = random_element(d, 0, q, w, K, rng)
                if not a.is_zero():
                    return a
        return None

    def __call__(self, rng, n, case):
        d = self.d
        # Θ has arity d+1 and needs total degree d-1; b feeds arity d+2
        # tuples with the same total degree; dbar needs total d-2.
        target = {"cyclic": d - 1, "hochschild": d - 1, "dbar": d - 2}.get(case, d - 1)
        for _ in range(20):
            if target < 0:
                qs = [0] * n
            else:
                qs = [0] * n
                for _ in range(target):
                    qs[rng.randrange(n)] += 1
                if max(qs) > d - 1:
                    continue
            ws = [tuple(rng.randint(-self.wr, self.wr) for _ in range(d)) for _ in range(n - 1)]
            ws.append(tuple(-sum(w[t] for w in ws) for t in range(d)))
            xs = [self.element(rng, q, w) for q, w in zip(qs, ws)]
            if all(x is not None for x in xs):
                return xs
        return None


def ad_ops(d):
    sampler = ADTupleSampler(d)
    return AlgebraOps(lambda x, y: x * y, lambda x, y: x + y, lambda x, c: x.scale(c),
                      lambda x: x.degree(), lambda rng: sampler.element(rng, 0, (0,) * d),
                      dbar=lambda x: x.dbar())
