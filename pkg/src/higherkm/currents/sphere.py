"""
Sphere algebras g ⊗ A_d, the residue cocycle built from an invariant
polynomial, and the resulting L∞ central extensions.
"""

from fractions import Fraction
from itertools import product, permutations
import random

from ..core.scalar import Scalar
from ..core.signs import perm_sign
from ..jouanolou.element import ADElement
from ..jouanolou.model import residue, random_element, slice_basis
from .linf import LInfinityAlgebra


class SphereElement:
    """Σ x_i ⊗ a_i with a_i ∈ A_d^{0,*}, plus a central multiple of K."""

    __slots__ = ("d", "parts", "central")

    def __init__(self, d, parts=None, central=0):
        self.d = d
        self.parts = {i: a for i, a in (parts or {}).items() if not a.is_zero()}
        self.central = central

    @classmethod
    def pure(cls, d, i, a):
        return cls(d, {i: a})

    @classmethod
    def K(cls, d, c=1):
        return cls(d, {}, c)

    def __add__(self, other):
        parts = dict(self.parts)
        for i, a in other.parts.items():
            parts[i] = parts[i] + a if i in parts else a
        return SphereElement(self.d, parts, self.central + other.central)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        if not c:
            return SphereElement(self.d)
        return SphereElement(self.d, {i: a.scale(c) for i, a in self.parts.items()},
                             self.central * c)

    def is_zero(self):
        return not self.parts and not self.central

    def degree(self):
        degs = set()
        for a in self.parts.values():
            for p, q in a.bidegrees():
                if p:
                    raise ValueError("sphere algebra elements live in A^{0,*}")
                degs.add(q)
        if len(degs) > 1:
            raise ValueError("inhomogeneous element")
        return degs.pop() if degs else 0

    def in_sphere_algebra(self):
        return all(a.in_A() and all(p == 0 for p, _ in a.bidegrees())
                   for a in self.parts.values())

    def __eq__(self, other):
        return isinstance(other, SphereElement) and (self - other).is_zero()

    def __str__(self):
        out = ["(%s) ⊗ x%d" % (a, i) for i, a in sorted(self.parts.items())]
        if self.central:
            out.append("%s·K" % Scalar(self.central))
        return " + ".join(out) if out else "0"

    __repr__ = __str__


def sphere_bracket(g, x, y):
    """[x ⊗ a, y ⊗ b] = [x, y] ⊗ ab."""
    out = {}
    for i, a in x.parts.items():
        for j, b in y.parts.items():
            br = g.bracket_basis(i, j)
            if not br:
                continue
            ab = a * b
            if ab.is_zero():
                continue
            for k, c in br.items():
                t = ab.scale(c)
                out[k] = out[k] + t if k in out else t
    return SphereElement(x.d, out)


def sphere_dbar(x):
    return SphereElement(x.d, {i: a.dbar() for i, a in x.parts.items()})


def fhk_cocycle(theta, inputs, window=None):
    """
    Res θ(a_0, ∂a_1, ..., ∂a_d): θ on the Lie factors, the product
    a_0 ∂a_1 ⋯ ∂a_d on the A_d factors, residue of its (d, d-1) part.
    """
    d = inputs[0].d
    if len(inputs) != d + 1 or theta.degree != d + 1:
        raise ValueError("need d+1 inputs and a degree d+1 polynomial")
    comps = [list(inputs[0].parts.items())]
    for x in inputs[1:]:
        comps.append([(i, a.del_()) for i, a in x.parts.items()])
    # collect the A-part integrand with θ weights, then take one residue
    integrand = None
    for choice in product(*comps):
        idx = tuple(i for i, _ in choice)
        c = theta.basis_value(idx)
        if not c:
            continue
        prod_ = choice[0][1]
        for _, a in choice[1:]:
            prod_ = prod_ * a
            if prod_.is_zero():
                break
        if prod_.is_zero():
            continue
        term = prod_.scale(c)
        integrand = term if integrand is None else integrand + term
    if integrand is None:
        return Scalar(0)
    top = integrand.component(d, d - 1)
    return residue(top, window)


def iterated_loop_cocycle(theta, inputs):
    """
    θ(x_0, ..., x_d) times τ^d times the coefficient of
    (z_1⋯z_d)^{-1} dz_1∧⋯∧dz_d in f_0 df_1 ∧ ⋯ ∧ df_d.  Inputs are
    {lie index: {exponent tuple: coefficient}}.
    """
    d = theta.degree - 1
    if len(inputs) != d + 1:
        raise ValueError("need d+1 inputs")
    target = tuple([-1] * d)
    total = 0
    for choice in product(*[list(x.items()) for x in inputs]):
        c = theta.basis_value(tuple(i for i, _ in choice))
        if not c:
            continue
        f0 = choice[0][1]
        fs = [f for _, f in choice[1:]]
        s = 0
        for sigma in permutations(range(d)):
            sg = perm_sign(list(sigma))
            # Σ over monomials: f_0 · Π_k ∂_{σ(k)} f_k
            for m0, c0 in f0.items():
                for ms in product(*[list(f.items()) for f in fs]):
                    coef = c0
                    exp = list(m0)
                    for k, (m, ck) in enumerate(ms):
                        v = sigma[k]
                        coef = coef * ck * m[v]
                        if not coef:
                            break
                        for t in range(d):
                            exp[t] += m[t] - (1 if t == v else 0)
                    if coef and tuple(exp) == target:
                        s += sg * coef
        total = total + c * s
    return Scalar(total) * Scalar.tau_power(d) if total else Scalar(0)


def laurent_to_sphere(x):
    """d = 1: {lie index: {n: c}} -> SphereElement."""
    parts = {}
    for i, f in x.items():
        coeffs = {(m[0] if isinstance(m, tuple) else m): c for m, c in f.items()}
        parts[i] = ADElement.from_laurent(coeffs)
    return SphereElement(1, parts)


# ---------------------------------------------------------------------------
# the extension

class SphereSampler:
    """
    Random homogeneous tuples in g ⊗ A_d^{0,*}.  Tuples used for the
    arity d+1 and d+2 identities are biased towards total weight zero and
    the total degree where the cocycle can be nonzero.
    """

    def __init__(self, g, d, weight_range=2, extra_levels=1, lie_terms=2):
        self.g = g
        self.d = d
        self.wr = weight_range
        self.extra = extra_levels
        self.lie_terms = lie_terms

    def element(self, rng, q, w):
        d = self.d
        h = sum(w)
        kmin = max(0, -h, q)
        for _ in range(6):
            K = kmin + rng.randint(0, self.extra)
            if not slice_basis(d, tuple(w), 0, q, K):
                continue
            parts = {}
            for i in rng.sample(range(self.g.dim), min(self.lie_terms, self.g.dim)):
                a = random_element(d, 0, q, w, K, rng)
                if not a.is_zero():
                    parts[i] = a
            if parts:
                return SphereElement(d, parts)
        return None

    def cocycle_tuple(self, rng):
        """d+1 inputs of total degree d-1 and total weight zero."""
        return self(rng, self.d + 1, "cocycle")

    def __call__(self, rng, n, case):
        d = self.d
        if case == "cocycle" or n == d + 2:
            target = d - 1
        elif n == d + 1:
            target = d - 2
        else:
            target = None
        for _ in range(20):
            if target is None or target < 0:
                qs = [rng.randint(0, d - 1) for _ in range(n)]
            else:
                qs = [0] * n
                for _ in range(target):
                    qs[rng.randrange(n)] += 1
                if max(qs) > d - 1:
                    continue
            ws = [tuple(rng.randint(-self.wr, self.wr) for _ in range(d)) for _ in range(n - 1)]
            last = tuple(-sum(w[t] for w in ws) for t in range(d))
            if target is not None and target >= 0 and rng.random() < 0.8:
                ws.append(last)
            else:
                ws.append(tuple(rng.randint(-self.wr, self.wr) for _ in range(d)))
            xs = [self.element(rng, q, w) for q, w in zip(qs, ws)]
            if all(x is not None for x in xs):
                return xs
        return None


def build_extension(g, theta, d, window=None, sampler=None):
    """
    The central extension of g ⊗ A_d by K: ℓ_1 = dbar ⊗ id, ℓ_2 the
    pointwise bracket, ℓ_{d+1} = (fhk cocycle)·K.  For d = 1 the cocycle is
    added to ℓ_2.
    """
    if theta.degree != d + 1:
        raise ValueError("θ must have degree d+1")

    def cocycle(*xs):
        v = fhk_cocycle(theta, list(xs), window)
        return SphereElement(d, {}, v)

    brackets = {1: sphere_dbar}
    if d == 1:
        brackets[2] = lambda x, y: sphere_bracket(g, x, y) + cocycle(x, y)
    else:
        brackets[2] = lambda x, y: sphere_bracket(g, x, y)
        brackets[d + 1] = cocycle
    L = LInfinityAlgebra(brackets, lambda x: x.degree(), lambda: SphereElement(d),
                         sampler or SphereSampler(g, d),
                         name="ext(%s, d=%d, %s)" % (g.name, d, theta.name), central="K")
    L.lie = g
    L.theta = theta
    L.d = d
    return L


def corrupt(theta, key, delta=1):
    """Copy of θ with the value on one sorted index tuple shifted."""
    from .invariant import InvariantPolynomial
    vals = dict(theta.values)
    key = tuple(sorted(key))
    vals[key] = vals.get(key, 0) + delta
    return InvariantPolynomial(theta.lie, theta.degree, vals, name=theta.name + "*")
