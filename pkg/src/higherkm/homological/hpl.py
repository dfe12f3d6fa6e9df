"""
Deformation retractions and the homological perturbation lemma over Q[K].

Conventions: π ι = 1 and ι π - 1 = d η + η d.  A perturbation δ of degree
+1 with (d + Kδ)² = 0 is transferred with

    A  = Σ_{k>=0} (K δ η)^k · K δ         (a finite sum: δη is nilpotent)
    d̃  = d_small + π A ι
    ι̃  = ι + η A ι
    π̃  = π + π A η
    η̃  = η + η A η
"""

from fractions import Fraction
import random

from ..core.linalg import GradedSpaceWindow, SparseMatrix
from ..core.complexes import ChainComplexWindow


class GradedMap:
    """Blocks {n: SparseMatrix src[n] -> tgt[n + shift]}."""

    def __init__(self, src, tgt, shift, blocks=None):
        self.src = src
        self.tgt = tgt
        self.shift = shift
        self.blocks = {}
        empty = GradedSpaceWindow([])
        for n, sp in src.items():
            m = (blocks or {}).get(n)
            if m is None:
                m = SparseMatrix(tgt.get(n + shift, empty), sp)
            self.blocks[n] = m

    @classmethod
    def identity(cls, spaces):
        return cls(spaces, spaces, 0,
                   {n: SparseMatrix(sp, sp, columns={c: {c: 1} for c in sp})
                    for n, sp in spaces.items()})

    def __matmul__(self, other):
        """self ∘ other."""
        blocks = {}
        for n, m in other.blocks.items():
            k = n + other.shift
            if k in self.blocks:
                blocks[n] = self.blocks[k] @ m
        return GradedMap(other.src, self.tgt, self.shift + other.shift, blocks)

    def __add__(self, other):
        if self.shift != other.shift:
            raise ValueError("adding maps of different degrees")
        return GradedMap(self.src, self.tgt, self.shift,
                         {n: self.blocks[n] + other.blocks[n] for n in self.blocks})

    def scale(self, c):
        return GradedMap(self.src, self.tgt, self.shift,
                         {n: m.scale(c) for n, m in self.blocks.items()})

    def __sub__(self, other):
        return self + other.scale(-1)

    def is_zero(self):
        return all(m.is_zero() for m in self.blocks.values())

    def __eq__(self, other):
        return (self - other).is_zero()


class KMap:
    """Polynomial in K with GradedMap coefficients: {power: GradedMap}."""

    def __init__(self, src, tgt, shift, terms=None):
        self.src, self.tgt, self.shift = src, tgt, shift
        self.terms = {p: m for p, m in (terms or {}).items() if not m.is_zero()}

    @classmethod
    def const(cls, m):
        return cls(m.src, m.tgt, m.shift, {0: m})

    def __add__(self, other):
        t = dict(self.terms)
        for p, m in other.terms.items():
            t[p] = t[p] + m if p in t else m
        return KMap(self.src, self.tgt, self.shift, t)

    def scale(self, c):
        return KMap(self.src, self.tgt, self.shift, {p: m.scale(c) for p, m in self.terms.items()})

    def __sub__(self, other):
        return self + other.scale(-1)

    def __matmul__(self, other):
        t = {}
        for p, a in self.terms.items():
            for q, b in other.terms.items():
                c = a @ b
                t[p + q] = t[p + q] + c if p + q in t else c
        return KMap(other.src, self.tgt, self.shift + other.shift, t)

    def times_K(self, k=1):
        return KMap(self.src, self.tgt, self.shift, {p + k: m for p, m in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def at(self, K):
        out = None
        for p, m in self.terms.items():
            t = m.scale(Fraction(K) ** p)
            out = t if out is None else out + t
        if out is None:
            return GradedMap(self.src, self.tgt, self.shift)
        return out

    def degree_in_K(self):
        return max(self.terms) if self.terms else -1


def complex_map(cx, which="d"):
    src = cx.spaces
    blocks = cx.d if which == "d" else cx.delta
    return GradedMap(src, src, 1, blocks)


class Retraction:
    """(big, small, ι, π, η) with π ι = 1 and ι π - 1 = d η + η d."""

    def __init__(self, big, small, iota, pi, eta, check=True):
        self.big = big
        self.small = small
        self.iota = iota
        self.pi = pi
        self.eta = eta
        if check:
            self.check()

    def check(self):
        d = complex_map(self.big)
        ds = complex_map(self.small)
        one_s = GradedMap.identity(self.small.spaces)
        one_b = GradedMap.identity(self.big.spaces)
        if not (self.pi @ self.iota) == one_s:
            raise ValueError("π ι != 1")
        if not ((self.iota @ self.pi) - one_b) == (d @ self.eta + self.eta @ d):
            raise ValueError("ι π - 1 != d η + η d")
        if not (d @ self.iota) == (self.iota @ ds):
            raise ValueError("ι is not a chain map")
        if not (ds @ self.pi) == (self.pi @ d):
            raise ValueError("π is not a chain map")
        return True

    def side_conditions(self):
        return {"eta_iota": (self.eta @ self.iota).is_zero(),
                "pi_eta": (self.pi @ self.eta).is_zero(),
                "eta_eta": (self.eta @ self.eta).is_zero()}

    def with_side_conditions(self):
        """Replace η by η1 = P η P, P = 1 - ι π, then by -η1 d η1."""
        d = complex_map(self.big)
        P = GradedMap.identity(self.big.spaces) - self.iota @ self.pi
        e1 = P @ self.eta @ P
        e2 = (e1 @ d @ e1).scale(-1)
        return Retraction(self.big, self.small, self.iota, self.pi, e2)


class PerturbationResult:
    def __init__(self, iota, pi, eta, d_small, order, side_conditions_enforced):
        self.iota = iota
        self.pi = pi
        self.eta = eta
        self.d_small = d_small
        self.nilpotency_order = order
        self.side_conditions_enforced = side_conditions_enforced

    def small_complex_at(self, small_spaces, K):
        dm = self.d_small.at(K)
        return ChainComplexWindow(small_spaces, dm.blocks, check=True)


class NotNilpotent(ValueError):
    pass


def perturb_retraction(r, delta):
    """
    Transfer d + Kδ along r.  ``delta`` is a GradedMap of degree +1 (or a
    twisted ChainComplexWindow's δ).  Side conditions are enforced first.
    """
    enforced = not all(r.side_conditions().values())
    if enforced:
        r = r.with_side_conditions()
    big = r.big.spaces
    if isinstance(delta, ChainComplexWindow):
        delta = complex_map(delta, "delta")
    d = complex_map(r.big)
    D2 = [(d @ delta + delta @ d), delta @ delta]
    if not all(m.is_zero() for m in D2):
        raise ValueError("(d + Kδ)² != 0")
    de = delta @ r.eta
    # nilpotency of δη within the window
    bound = sum(sp.dim for sp in big.values()) + 1
    powers = [GradedMap.identity(big)]
    while not powers[-1].is_zero():
        if len(powers) > bound:
            raise NotNilpotent("δη is not nilpotent on the window")
        powers.append(powers[-1] @ de)
    order = len(powers) - 1
    # A = Σ_k (K δη)^k K δ
    A = KMap(big, big, 1)
    for k, pw in enumerate(powers[:-1]):
        A = A + KMap.const(pw @ delta).times_K(k + 1)
    iota = KMap.const(r.iota)
    pi = KMap.const(r.pi)
    eta = KMap.const(r.eta)
    d_small = KMap.const(complex_map(r.small)) + pi @ A @ iota
    it = iota + eta @ A @ iota
    pt = pi + pi @ A @ eta
    et = eta + eta @ A @ eta
    return PerturbationResult(it, pt, et, d_small, order, enforced)


def verify_perturbation(r, delta, res):
    """All transferred identities, exactly, as polynomials in K."""
    big = r.big.spaces
    small = r.small.spaces
    D = KMap.const(complex_map(r.big)) + KMap.const(delta).times_K(1)
    ds = res.d_small
    one_s = KMap.const(GradedMap.identity(small))
    one_b = KMap.const(GradedMap.identity(big))
    checks = {
        "d_small_squared": (ds @ ds).is_zero(),
        "pi_iota": (res.pi @ res.iota - one_s).is_zero(),
        "homotopy": (res.iota @ res.pi - one_b - (D @ res.eta + res.eta @ D)).is_zero(),
        "iota_chain": (D @ res.iota - res.iota @ ds).is_zero(),
        "pi_chain": (ds @ res.pi - res.pi @ D).is_zero(),
        "eta_iota": (res.eta @ res.iota).is_zero(),
        "pi_eta": (res.pi @ res.eta).is_zero(),
        "eta_eta": (res.eta @ res.eta).is_zero(),
    }
    return checks


# ---------------------------------------------------------------------------
# random test retractions

def _rand_frac(rng, r=3):
    return Fraction(rng.randint(-r, r))


def random_complex(rng, degrees, max_dim=2, name="S"):
    """A small complex built from random cycles, boundaries and pairs."""
    spaces, d = {}, {}
    labels = {n: [] for n in degrees}
    edges = []
    for n in degrees:
        for t in range(rng.randint(0, max_dim)):
            labels[n].append((name, n, "h", t))
        if n + 1 in labels and rng.random() < 0.6:
            labels[n].append((name, n, "e", 0))
            labels[n + 1].append((name, n + 1, "f", 0))
            edges.append(((name, n, "e", 0), (name, n + 1, "f", 0)))
    for n in degrees:
        spaces[n] = GradedSpaceWindow(labels[n], n)
    cols = {n: {} for n in degrees}
    for e, f in edges:
        cols[e[1]][e] = {f: 1}
    for n in degrees:
        tgt = spaces.get(n + 1, GradedSpaceWindow([]))
        d[n] = SparseMatrix(tgt, spaces[n], columns=cols[n])
    return ChainComplexWindow(spaces, d)


def _random_unipotent(rng, sp, steps=4):
    """Random invertible g on a space and its inverse, via transvections."""
    labs = list(sp)
    ops = []
    for _ in range(steps if len(labs) > 1 else 0):
        i, j = rng.sample(range(len(labs)), 2)
        ops.append((labs[i], labs[j], _rand_frac(rng, 2)))

    def apply(ops_seq, sign):
        m = {c: {c: Fraction(1)} for c in labs}
        for a, b, c in ops_seq:
            # row operation: e_a += sign*c * e_b in the image
            for col in m.values():
                if b in col:
                    v = col.get(a, 0) + sign * c * col[b]
                    if v:
                        col[a] = v
                    else:
                        col.pop(a, None)
        return SparseMatrix(sp, sp, columns=m)

    g = apply(ops, 1)
    ginv = apply(list(reversed(ops)), -1)
    return g, ginv


def random_retraction(rng, degrees=(0, 1, 2), max_dim=2, scramble=True, spoil=True):
    """
    Retraction of S ⊕ (contractible pairs) onto S, conjugated by a random
    basis change; with ``spoil`` the homotopy is modified by d k - k d so
    that the side conditions fail.
    """
    S = random_complex(rng, degrees, max_dim, "S")
    spaces, d = {}, {}
    pairs = []
    for n in degrees:
        extra = []
        if n + 1 in degrees:
            for t in range(rng.randint(0, 2)):
                extra.append(("P", n, "e", t))
                pairs.append((n, t))
        if n - 1 in degrees:
            extra += [("P", n, "f", t) for (m, t) in pairs if m == n - 1]
        spaces[n] = GradedSpaceWindow(list(S.spaces[n]) + extra, n)
    for n in degrees:
        tgt = spaces.get(n + 1, GradedSpaceWindow([]))
        cols = {}
        for c in S.spaces[n]:
            cols[c] = dict(S.d[n].column(c))
        for (m, t) in pairs:
            if m == n:
                cols[("P", n, "e", t)] = {("P", n + 1, "f", t): 1}
        d[n] = SparseMatrix(tgt, spaces[n], columns=cols)
    iota = {n: SparseMatrix(spaces[n], S.spaces[n], columns={c: {c: 1} for c in S.spaces[n]})
            for n in degrees}
    pi = {n: SparseMatrix(S.spaces[n], spaces[n], columns={c: {c: 1} for c in S.spaces[n]})
          for n in degrees}
    eta = {}
    for n in degrees:
        tgt = spaces.get(n - 1, GradedSpaceWindow([]))
        cols = {}
        for (m, t) in pairs:
            if m == n - 1:
                cols[("P", n, "f", t)] = {("P", n - 1, "e", t): -1}
        eta[n] = SparseMatrix(tgt, spaces[n], columns=cols)
    if scramble:
        gs = {n: _random_unipotent(rng, spaces[n]) for n in degrees}
        conj = lambda n, m, k: gs[k][0] @ m @ gs[n][1]
        d = {n: conj(n, d[n], n + 1) if n + 1 in degrees else d[n] for n in degrees}
        iota = {n: gs[n][0] @ iota[n] for n in degrees}
        pi = {n: pi[n] @ gs[n][1] for n in degrees}
        eta = {n: conj(n, eta[n], n - 1) if n - 1 in degrees else eta[n] for n in degrees}
    big = ChainComplexWindow(spaces, d)
    r = Retraction(big, S, GradedMap(S.spaces, spaces, 0, iota),
                   GradedMap(spaces, S.spaces, 0, pi), GradedMap(spaces, spaces, -1, eta))
    if spoil:
        # k of degree -2 changes η by d k - k d without breaking the homotopy
        kb = {}
        for n in degrees:
            if n - 2 in degrees:
                cols = {c: {t: _rand_frac(rng) for t in rng.sample(list(spaces[n - 2]),
                                                                  min(1, spaces[n - 2].dim))}
                        for c in spaces[n]}
                kb[n] = SparseMatrix(spaces[n - 2], spaces[n], columns=cols)
        k = GradedMap(spaces, spaces, -2, kb)
        dm = complex_map(big)
        r = Retraction(big, S, r.iota, r.pi, r.eta + dm @ k - k @ dm)
    return r


def staircase_complex():
    """a -> b1, b2 -> c: a two-step complex whose δη chains can reach length 2."""
    sp = {0: GradedSpaceWindow(["a"], 0), 1: GradedSpaceWindow(["b1", "b2"], 1),
          2: GradedSpaceWindow(["c"], 2)}
    d = {0: SparseMatrix(sp[1], sp[0], columns={"a": {"b1": 1}}),
         1: SparseMatrix(sp[2], sp[1], columns={"b2": {"c": 1}}),
         2: SparseMatrix(GradedSpaceWindow([]), sp[2])}
    return ChainComplexWindow(sp, d, name="D")


def tensor_perturbation(r, rng, D=None, deform=True):
    """
    Replace a retraction of C by the retraction of C ⊗ D (D a small complex,
    identity on D), with δ = (-1)^{|c|} ⊗ d_D.  With ``deform`` the maps ι,
    π, η are moved by random homotopies that do not respect the tensor
    structure, so δ no longer commutes with them.  Returns (retraction, δ).
    """
    C, S = r.big, r.small
    if D is None:
        D = staircase_complex()

    def tens(X, Y):
        sp = {}
        for n, a in X.spaces.items():
            for m, b in Y.spaces.items():
                sp.setdefault(n + m, []).extend((x, y) for x in a for y in b)
        return {n: GradedSpaceWindow(v, n) for n, v in sp.items()}

    big = tens(C, D)
    small = tens(S, D)
    degX = lambda X: {x: n for n, sp in X.spaces.items() for x in sp}

    def lift(f, X, Y, src, tgt, shift, sign_by_x=False):
        dx = degX(X)
        dy = degX(D)
        blocks = {}
        for n, sp in src.items():
            cols = {}
            for (x, y) in sp:
                img = f.blocks[dx[x]].column(x)
                cols[(x, y)] = {(u, y): c for u, c in img.items()}
            blocks[n] = SparseMatrix(tgt.get(n + shift, GradedSpaceWindow([])), sp, columns=cols)
        return GradedMap(src, tgt, shift, blocks)

    dC = complex_map(C)
    dS = complex_map(S)
    d_big = lift(dC, C, D, big, big, 1)
    d_small = lift(dS, S, D, small, small, 1)
    dxC = degX(C)
    dD = complex_map(D)
    dyD = degX(D)
    blocks = {}
    for n, sp in big.items():
        cols = {}
        for (x, y) in sp:
            s = -1 if dxC[x] % 2 else 1
            cols[(x, y)] = {(x, v): s * c for v, c in dD.blocks[dyD[y]].column(y).items()}
        blocks[n] = SparseMatrix(big.get(n + 1, GradedSpaceWindow([])), sp, columns=cols)
    delta = GradedMap(big, big, 1, blocks)
    bigcx = ChainComplexWindow(big, d_big.blocks, delta.blocks)
    smallcx = ChainComplexWindow(small, d_small.blocks)
    rr = Retraction(bigcx, smallcx, lift(r.iota, S, D, small, big, 0),
                    lift(r.pi, C, D, big, small, 0), lift(r.eta, C, D, big, big, -1))
    if deform:
        dy = {y: n for n, sp in D.spaces.items() for y in sp}
        key = lambda a: dy[a[1]]
        rr = deform_retraction(rr, rng, key, key)
    return rr, delta


def _random_vertical(rng, src, tgt, shift, key_src, key_tgt):
    """Random map of degree ``shift`` that preserves the key of a label."""
    blocks = {}
    for n, sp in src.items():
        t = tgt.get(n + shift, GradedSpaceWindow([]))
        cols = {}
        for c in sp:
            cands = [u for u in t if key_tgt(u) == key_src(c)]
            if cands and rng.random() < 0.7:
                u = rng.choice(cands)
                cols[c] = {u: _rand_frac(rng, 2) or Fraction(1)}
        blocks[n] = SparseMatrix(t, sp, columns=cols)
    return GradedMap(src, tgt, shift, blocks)


def deform_retraction(r, rng, key_big, key_small):
    """
    ι' = ι + d j + j d with j = P j0 (P = 1 - ιπ), π' = π + j' d + d j'
    with j' = j0' P, and the matching η'.  Maps preserve the given keys.
    """
    big, small = r.big.spaces, r.small.spaces
    d = complex_map(r.big)
    ds = complex_map(r.small)
    P = GradedMap.identity(big) - r.iota @ r.pi
    j = P @ _random_vertical(rng, small, big, -1, key_small, key_big)
    iota = r.iota + d @ j + j @ ds
    eta = r.eta + j @ r.pi
    r1 = Retraction(r.big, r.small, iota, r.pi, eta)
    P = GradedMap.identity(big) - r1.iota @ r1.pi
    jp = _random_vertical(rng, big, small, -1, key_big, key_small) @ P
    pi = r1.pi + jp @ d + ds @ jp
    eta = r1.eta + r1.iota @ jp
    return Retraction(r.big, r.small, r1.iota, pi, eta)
