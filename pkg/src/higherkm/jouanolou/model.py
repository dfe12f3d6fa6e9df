"""
Windowed linear algebra on A_d: weight slices, the Bochner-Martinelli
element, the residue functional and Dolbeault cohomology.

A torus weight w and form degree p fix the holomorphic degree
h = Σw - p of every term.  At level K (denominator (zz*)^K) a slice of
bidegree (p, q) is spanned by numerators z^a z*^b dz_S dz*_T with
|a| = h + K, |b| = K - q and a - b = w - 1_S + 1_T.  Multiplying by zz*
embeds level K into level K+1, and dbar maps level K to level K+1.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial

from ..core.scalar import Scalar
from ..core.linalg import Echelon, vaxpy
from .element import ADElement, raw_deriv, raw_contraction


class WindowTooSmall(ValueError):
    """The requested answer depends on data outside the window."""


class UnstableWindow(ValueError):
    """Results changed when the window was enlarged."""


class WeightWindow:
    """
    Truncation scheme: a box of torus weights, a cap on the total degree of
    numerators and a number of levels K_max above the lowest level at which
    a slice is nonempty.
    """

    def __init__(self, box, deg_max=8, K_max=5):
        self.box = [tuple(r) for r in box]
        if any(lo > hi for lo, hi in self.box):
            raise ValueError("empty weight box")
        if deg_max < 0 or K_max < 0:
            raise ValueError("bounds must be nonnegative")
        self.deg_max = deg_max
        self.K_max = K_max

    @classmethod
    def cube(cls, d, r, deg_max=8, K_max=5):
        return cls([(-r, r)] * d, deg_max, K_max)

    @property
    def d(self):
        return len(self.box)

    def weights(self):
        out = [()]
        for lo, hi in self.box:
            out = [w + (x,) for w in out for x in range(lo, hi + 1)]
        return out

    def enlarged(self):
        return WeightWindow(self.box, self.deg_max + 2, self.K_max + 1)

    def level(self, w, p, q):
        """Top level used for slice (w, p, q), or None when it is empty."""
        h = sum(w) - p
        kmin = max(0, -h, q)
        top = kmin + self.K_max
        kdeg = (self.deg_max - h + q) // 2
        top = min(top, kdeg)
        return top if top >= kmin else None

    def __repr__(self):
        return "WeightWindow(box=%s, deg_max=%d, K_max=%d)" % (self.box, self.deg_max, self.K_max)


# ---------------------------------------------------------------------------
# slices

def _compositions(total, lower):
    """Tuples x >= lower (componentwise) with Σx = total."""
    n = len(lower)
    rest = total - sum(lower)
    if rest < 0:
        return []
    out = []

    def rec(i, left, acc):
        if i == n - 1:
            out.append(tuple(acc + [lower[i] + left]))
            return
        for x in range(left + 1):
            rec(i + 1, left - x, acc + [lower[i] + x])

    if n == 0:
        return [()] if rest == 0 else []
    rec(0, rest, [])
    return out


def slice_monomials(d, w, p, q, K):
    """Numerator keys of V_K(w, p, q)."""
    h = sum(w) - p
    if h + K < 0 or K - q < 0:
        return []
    keys = []
    for S in combinations(range(d), p):
        for T in combinations(range(d), q):
            c = list(w)
            for s in S:
                c[s] -= 1
            for t in T:
                c[t] += 1
            lower = [max(0, x) for x in c]
            for a in _compositions(h + K, lower):
                b = tuple(x - y for x, y in zip(a, c))
                keys.append((a, b, S, T))
    return keys


@lru_cache(maxsize=4096)
def slice_basis(d, w, p, q, K):
    """
    Basis (list of numerator dicts) of the level-K part of A^{p,q} at weight
    w: the kernel of the Euler contraction on V_K(w, p, q).
    """
    keys = slice_monomials(d, w, p, q, K)
    if q == 0:
        return tuple({k: 1} for k in keys)
    ech = Echelon(track=True)
    basis = []
    for key in keys:
        img = raw_contraction({key: 1}, d)
        r, combo = ech.reduce(img, {key: 1})
        if not r:
            basis.append(combo)
            continue
        pv = min(r)
        inv = 1 / Fraction(r[pv])
        ech.piv[pv] = {k: x * inv for k, x in r.items()}
        ech.combo[pv] = {k: x * inv for k, x in combo.items()}
    return tuple(basis)


def dbar_numerator(vec, K, d):
    return raw_deriv(vec, K, d, False)


def lift_numerator(vec, K_from, K_to, d):
    return ADElement(d, vec, K_from, normalize=False).lift(K_to)


# ---------------------------------------------------------------------------
# Bochner-Martinelli element

def bm_rational(d):
    """(d-1)!/(zz*)^d Σ (-1)^(i-1) z*_i dz*_1..^i..dz*_d, without τ^-d."""
    terms = {}
    zero = (0,) * d
    full = tuple(range(d))
    for i in range(d):
        b = tuple(1 if j == i else 0 for j in range(d))
        T = full[:i] + full[i + 1:]
        terms[(zero, b, (), T)] = factorial(d - 1) * (-1 if i % 2 else 1)
    return ADElement(d, terms, d)


def bm_kernel(d):
    """The Bochner-Martinelli element ω_BM ∈ A^{0,d-1}, including τ^-d."""
    if d < 1:
        raise ValueError("d must be positive")
    return bm_rational(d).scale(Scalar.tau_power(-d))


# ---------------------------------------------------------------------------
# residue

@lru_cache(maxsize=64)
def _residue_functional(d, K):
    """Echelon of dbar-image at level K and the reduced class of ω_BM·dz."""
    zero = (0,) * d
    img = Echelon()
    for beta in slice_basis(d, zero, d, d - 2, K - 1) if d >= 2 else ():
        img.add(dbar_numerator(beta, K - 1, d))
    dimA = len(slice_basis(d, zero, d, d - 1, K))
    if dimA - img.rank != 1:
        raise WindowTooSmall("weight-zero quotient at level %d has dimension %d"
                             % (K, dimA - img.rank))
    bm = bm_rational(d) * ADElement.volume(d)
    r, _ = img.reduce(bm.lift(K))
    if not r:
        raise WindowTooSmall("ω_BM·dz is exact in the window")
    piv = min(r)
    return img, r, piv


def residue(omega, window=None):
    """
    Res: A^{d,d-1} -> Q(τ), normalized by Res(f·ω_BM·dz) = f(0).  Only the
    weight-zero part contributes; it is reduced modulo the dbar-image and
    compared with the class of ω_BM·dz.
    """
    d = omega.d
    om = omega.weight_component((0,) * d)
    if om.is_zero():
        return Scalar(0)
    for (_, _, S, T) in om.terms:
        if len(S) != d or len(T) != d - 1:
            raise ValueError("residue needs an element of A^{d,d-1}")
    K = max(om.k, d)
    if window is not None and K > d + window.K_max:
        raise WindowTooSmall("denominator (zz*)^%d exceeds the window" % om.k)
    img, rbm, piv = _residue_functional(d, K)
    r, _ = img.reduce(om.lift(K))
    if not r:
        return Scalar(0)
    c = r.get(piv)
    if c is None:
        raise ValueError("element is not in A^{d,d-1}")
    c = (Fraction(c) if isinstance(c, int) else c) / rbm[piv]
    rest = dict(r)
    vaxpy(rest, rbm, -c)
    if rest:
        raise ValueError("element is not in A^{d,d-1}")
    return Scalar(c) * Scalar.tau_power(d) if not isinstance(c, Scalar) else c * Scalar.tau_power(d)


# ---------------------------------------------------------------------------
# cohomology

def slice_cohomology(d, w, p, q, window, with_reps=False):
    """
    dim of ker(dbar)/dbar(level K-1) at the top level K of slice (w, p, q).
    Returns (dim, K, representatives).
    """
    w = tuple(w)
    K = window.level(w, p, q)
    if K is None:
        return 0, None, []
    basis = slice_basis(d, w, p, q, K)
    ech = Echelon(track=True)
    kernel = []
    for idx, vec in enumerate(basis):
        img = dbar_numerator(vec, K, d)
        r, combo = ech.reduce(img, {idx: 1})
        if not r:
            kernel.append(combo)
            continue
        pv = min(r)
        inv = 1 / Fraction(r[pv])
        ech.piv[pv] = {k: x * inv for k, x in r.items()}
        ech.combo[pv] = {k: x * inv for k, x in combo.items()}
    image = Echelon()
    if q >= 1:
        for beta in slice_basis(d, w, p, q - 1, K - 1) if K - 1 >= 0 else ():
            image.add(dbar_numerator(beta, K - 1, d))
    dim = len(kernel) - image.rank
    reps = []
    if with_reps:
        for combo in kernel:
            vec = {}
            for idx, c in combo.items():
                vaxpy(vec, basis[idx], c)
            if image.add(vec):
                reps.append(ADElement(d, vec, K))
    return dim, K, reps


def cohomology_ad(window, p, qs=None, check_stability=True):
    """
    dim H^{p,q} of A_d per torus weight in the window:
    {(q, w): dim}.  With check_stability the computation is repeated on the
    enlarged window and any disagreement raises UnstableWindow.
    """
    d = window.d
    if qs is None:
        qs = range(d + 1)
    out = {}
    for w in window.weights():
        for q in qs:
            out[(q, w)] = slice_cohomology(d, w, p, q, window)[0]
    if check_stability:
        big = window.enlarged()
        bad = []
        for (q, w), v in out.items():
            v2 = slice_cohomology(d, w, p, q, big)[0]
            if v2 != v:
                bad.append((q, w, v, v2))
        if bad:
            raise UnstableWindow("cohomology changed on enlarging the window: %s" % bad[:5])
    return out


def random_element(d, p, q, w, K, rng, coeff_range=3):
    """Random element of the level-K slice of A^{p,q} at weight w."""
    basis = slice_basis(d, tuple(w), p, q, K)
    vec = {}
    for b in basis:
        c = rng.randint(-coeff_range, coeff_range)
        if c:
            vaxpy(vec, b, c)
    return ADElement(d, vec, K)
