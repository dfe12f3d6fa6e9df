"""
The Heisenberg dg Lie algebra A_d ⊗ (V ⊕ V*[d-1]) ⊕ C·K and the
Clifford algebra of V ⊕ V*.
"""

from itertools import combinations
import random

from ..core.scalar import Scalar
from ..core.linalg import Echelon, vaxpy
from ..jouanolou.element import ADElement
from ..jouanolou.model import residue, random_element, slice_basis
from .linf import LInfinityAlgebra
from .sphere import SphereElement, sphere_dbar


class HeisenbergSpace:
    """Labels 0..n-1 are v_i, n..2n-1 are the dual vectors v*_i."""

    def __init__(self, n, d, odd=False):
        self.n = n
        self.d = d
        self.odd = odd

    def is_dual(self, i):
        return i >= self.n

    def degree(self, x):
        degs = set()
        for i, a in x.parts.items():
            shift = -(self.d - 1) if self.is_dual(i) else 0
            par = 1 if self.odd else 0
            for p, q in a.bidegrees():
                degs.add(q + shift + par)
        if len(degs) > 1:
            raise ValueError("inhomogeneous element")
        return degs.pop() if degs else 0


def heisenberg_pairing(space, x, y, window=None):
    """ω(α⊗v, β⊗v*) = ⟨v, v*⟩·Res(αβ dz), extended graded antisymmetrically."""
    n, d = space.n, space.d
    vol = ADElement.volume(d)
    total = Scalar(0)
    for i, a in x.parts.items():
        for j, b in y.parts.items():
            if not space.is_dual(i) and j == i + n:
                total = total + residue((a * b * vol).component(d, d - 1), window)
            elif space.is_dual(i) and i == j + n:
                # ω(y, x) = -(-1)^{|x||y|} ω(x, y)
                dx = space.degree(SphereElement(d, {i: a}))
                dy = space.degree(SphereElement(d, {j: b}))
                s = 1 if (dx * dy) % 2 else -1
                total = total + residue((b * a * vol).component(d, d - 1), window) * s
    return total


class HeisenbergSampler:
    def __init__(self, space, weight_range=2):
        self.space = space
        self.wr = weight_range

    def __call__(self, rng, n, case):
        sp = self.space
        d = sp.d
        for _ in range(20):
            xs = []
            ok = True
            wsum = [0] * d
            qsum = 0
            for t in range(n):
                dual = (t % 2 == 1) if rng.random() < 0.8 else rng.random() < 0.5
                if t == n - 1 and n >= 2:
                    w = tuple(-x for x in wsum)
                    q = max(0, min(d - 1, d - 1 - qsum - (1 if n == 2 and case % 3 == 0 else 0)))
                else:
                    w = tuple(rng.randint(-self.wr, self.wr) for _ in range(d))
                    q = rng.randint(0, d - 1)
                wsum = [a + b for a, b in zip(wsum, w)]
                qsum += q
                kmin = max(0, -sum(w), q)
                K = kmin + rng.randint(0, 1)
                if not slice_basis(d, w, 0, q, K):
                    ok = False
                    break
                a = random_element(d, 0, q, w, K, rng)
                if a.is_zero():
                    ok = False
                    break
                i = rng.randrange(sp.n) + (sp.n if dual else 0)
                xs.append(SphereElement(d, {i: a}))
            if ok:
                return xs
        return None


def heisenberg(n, d, odd=False, window=None):
    """Central extension of A_d ⊗ (V ⊕ V*[d-1]) by the residue pairing."""
    space = HeisenbergSpace(n, d, odd)
    brackets = {1: sphere_dbar,
                2: lambda x, y: SphereElement(d, {}, heisenberg_pairing(space, x, y, window))}
    L = LInfinityAlgebra(brackets, space.degree, lambda: SphereElement(d),
                         HeisenbergSampler(space), name="heis(n=%d, d=%d, %s)"
                         % (n, d, "odd" if odd else "even"), central="K")
    L.space = space
    return L


# ---------------------------------------------------------------------------
# Clifford algebra of V ⊕ V*

class Clifford:
    """
    Super Clifford algebra on odd generators v_1..v_n, v*_1..v*_n with
    v_i v*_j + v*_j v_i = δ_ij and all other generators anticommuting.
    Basis: ordered monomials v_S v*_T, keyed by (S, T).
    """

    def __init__(self, n):
        self.n = n
        self._cache = {}
        self.basis = [(S, T) for s in range(n + 1) for S in combinations(range(n), s)
                      for t in range(n + 1) for T in combinations(range(n), t)]

    def parity(self, key):
        S, T = key
        return (len(S) + len(T)) % 2

    def _word_to_normal(self, word):
        """
        Normal-order a word of generators ('v', i) / ('w', i), w = v*.
        Returns {(S, T): coef}.
        """
        word = tuple(word)
        if word in self._cache:
            return self._cache[word]
        # find first adjacent pair out of order
        for p in range(len(word) - 1):
            a, b = word[p], word[p + 1]
            if self._order(a) > self._order(b) or a == b:
                break
        else:
            S = tuple(i for k, i in word if k == "v")
            T = tuple(i for k, i in word if k == "w")
            r = {(S, T): 1}
            self._cache[word] = r
            return r
        out = {}
        if a == b:
            r = {}
        else:
            swapped = word[:p] + (b, a) + word[p + 2:]
            r = {k: -c for k, c in self._word_to_normal(swapped).items()}
            if a[0] == "w" and b[0] == "v" and a[1] == b[1]:
                vaxpy(r, self._word_to_normal(word[:p] + word[p + 2:]))
        out = {k: c for k, c in r.items() if c}
        self._cache[word] = out
        return out

    @staticmethod
    def _order(g):
        return (0 if g[0] == "v" else 1, g[1])

    def word(self, key):
        S, T = key
        return [("v", i) for i in S] + [("w", i) for i in T]

    def mul_basis(self, k1, k2):
        return self._word_to_normal(self.word(k1) + self.word(k2))

    def mul(self, x, y):
        out = {}
        for k1, a in x.items():
            for k2, b in y.items():
                vaxpy(out, self.mul_basis(k1, k2), a * b)
        return out

    def supercommutator(self, k1, k2):
        s = -1 if self.parity(k1) * self.parity(k2) else 1
        r = dict(self.mul_basis(k1, k2))
        vaxpy(r, self.mul_basis(k2, k1), -s)
        return r

    def top(self):
        return (tuple(range(self.n)), tuple(range(self.n)))

    def berezin(self, x):
        return x.get(self.top(), 0)


def clifford_hh0(n):
    """
    dim HH_0 = dim Cl/[Cl, Cl] and Berezin values: on the top monomial, on
    1, and the largest |Berezin| seen on a supercommutator (must be 0).
    """
    if n > 3:
        raise ValueError("clifford_hh0 is limited to dim V <= 3")
    if n < 0:
        raise ValueError("dim V must be nonnegative")
    cl = Clifford(n)
    idx = {k: i for i, k in enumerate(cl.basis)}
    ech = Echelon()
    ber_on_commutators = set()
    for k1 in cl.basis:
        for k2 in cl.basis:
            c = cl.supercommutator(k1, k2)
            if c:
                ber_on_commutators.add(cl.berezin(c))
                ech.add({idx[k]: v for k, v in c.items()})
    dim = len(cl.basis) - ech.rank
    reps = [k for k in cl.basis if not ech.contains({idx[k]: 1})]
    top = cl.top()
    return {
        "dimension": dim,
        "berezin_top": cl.berezin({top: 1}),
        "berezin_one": cl.berezin({((), ()): 1}),
        "berezin_vanishes_on_commutators": ber_on_commutators <= {0},
        "top_is_nonzero_class": not ech.contains({idx[top]: 1}),
        "representatives": reps[:1],
    }
