"""
Finite-dimensional Lie algebras and their representations.

Elements are sparse vectors {basis index: coefficient}.  Structure constants
are stored as {(i, j): {k: c}} for i < j; the other half follows from
antisymmetry.
"""

import json
from fractions import Fraction

from ..core.scalar import Scalar, parse_scalar
from ..core.linalg import vaxpy


def _num(x):
    """Parse a coefficient given as int, Fraction or string."""
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, Scalar):
        return x.to_fraction() if x.is_rational() else x
    s = parse_scalar(str(x))
    return s.to_fraction() if s.is_rational() else s


class FiniteLieAlgebra:
    def __init__(self, labels, brackets=None, name="", check=True):
        self.labels = list(labels)
        self.name = name
        self.n = len(self.labels)
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        self._br = {}
        for (i, j), vec in (brackets or {}).items():
            vec = {k: c for k, c in vec.items() if c}
            if i == j:
                if vec:
                    raise ValueError("[x, x] must vanish for even x")
                continue
            if i > j:
                i, j = j, i
                vec = {k: -c for k, c in vec.items()}
            if vec:
                self._br[(i, j)] = vec
        if check:
            self.check_jacobi()

    @property
    def dim(self):
        return self.n

    def bracket_basis(self, i, j):
        if i == j:
            return {}
        if i < j:
            return self._br.get((i, j), {})
        return {k: -c for k, c in self._br.get((j, i), {}).items()}

    def bracket(self, x, y):
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                v = self.bracket_basis(i, j)
                if v:
                    vaxpy(out, v, a * b)
        return out

    def basis_vector(self, i):
        return {i: 1}

    def is_abelian(self):
        return not self._br

    def check_jacobi(self):
        n = self.n
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    x, y, z = {i: 1}, {j: 1}, {k: 1}
                    s = self.bracket(x, self.bracket(y, z))
                    vaxpy(s, self.bracket(y, self.bracket(z, x)))
                    vaxpy(s, self.bracket(z, self.bracket(x, y)))
                    if s:
                        raise ValueError("Jacobi fails on %s" %
                                         ((self.labels[i], self.labels[j], self.labels[k]),))
        return True

    def ad_matrix(self, i):
        """ad(x_i) as a dense matrix."""
        m = [[Fraction(0)] * self.n for _ in range(self.n)]
        for j in range(self.n):
            for k, c in self.bracket_basis(i, j).items():
                m[k][j] += c
        return m

    def adjoint(self):
        return Representation(self, [self.ad_matrix(i) for i in range(self.n)], name="adjoint")

    def __repr__(self):
        return "FiniteLieAlgebra(%s, dim=%d)" % (self.name, self.n)


# ---------------------------------------------------------------------------
# dense matrix helpers

def mat_mul(a, b):
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * p for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in range(m):
            x = ai[k]
            if x:
                bk = b[k]
                for j in range(p):
                    if bk[j]:
                        oi[j] += x * bk[j]
    return out


def mat_add(a, b, c=1):
    return [[x + c * y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mat_trace(a):
    return sum(a[i][i] for i in range(len(a)))


def mat_identity(n):
    return [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]


def mat_zero(n):
    return [[Fraction(0)] * n for _ in range(n)]


class Representation:
    """Matrices ρ(x_i) for each basis element x_i of the host algebra."""

    def __init__(self, lie, matrices, name="", check=True):
        self.lie = lie
        self.mats = [[[_num(x) for x in row] for row in m] for m in matrices]
        if len(self.mats) != lie.dim:
            raise ValueError("one matrix per basis element expected")
        self.dim = len(self.mats[0]) if self.mats else 0
        self.name = name
        if check:
            self.check()

    def matrix(self, x):
        """ρ(x) for a vector x."""
        out = mat_zero(self.dim)
        for i, c in x.items():
            out = mat_add(out, self.mats[i], c)
        return out

    def check(self):
        L = self.lie
        for i in range(L.dim):
            for j in range(i + 1, L.dim):
                lhs = self.matrix(L.bracket_basis(i, j))
                a, b = self.mats[i], self.mats[j]
                rhs = mat_add(mat_mul(a, b), mat_mul(b, a), -1)
                if lhs != rhs:
                    raise ValueError("ρ fails to be a homomorphism on (%s, %s)"
                                     % (L.labels[i], L.labels[j]))
        return True


# ---------------------------------------------------------------------------
# built-ins

def abelian(n):
    return FiniteLieAlgebra(["x%d" % (i + 1) for i in range(n)], {}, name="abelian(%d)" % n)


def sl2():
    e, h, f = 0, 1, 2
    br = {(e, f): {h: 1}, (h, e): {e: 2}, (h, f): {f: -2}}
    return FiniteLieAlgebra(["e", "h", "f"], br, name="sl2")


def gl(N):
    labels = ["E%d%d" % (i + 1, j + 1) for i in range(N) for j in range(N)]
    idx = lambda i, j: i * N + j
    br = {}
    for i in range(N):
        for j in range(N):
            for k in range(N):
                for l in range(N):
                    a, b = idx(i, j), idx(k, l)
                    if a >= b:
                        continue
                    v = {}
                    if j == k:
                        v[idx(i, l)] = v.get(idx(i, l), 0) + 1
                    if l == i:
                        v[idx(k, j)] = v.get(idx(k, j), 0) - 1
                    v = {x: c for x, c in v.items() if c}
                    if v:
                        br[(a, b)] = v
    return FiniteLieAlgebra(labels, br, name="gl(%d)" % N)


def elementary(N, i, j):
    m = mat_zero(N)
    m[i][j] = Fraction(1)
    return m


def gl_fundamental(N):
    g = gl(N)
    return Representation(g, [elementary(N, i, j) for i in range(N) for j in range(N)],
                          name="fundamental")


def sl2_fundamental():
    F = Fraction
    mats = [[[F(0), F(1)], [F(0), F(0)]],
            [[F(1), F(0)], [F(0), F(-1)]],
            [[F(0), F(0)], [F(1), F(0)]]]
    return Representation(sl2(), mats, name="fundamental")


def abelian_weight_rep(weights):
    """Representation of abelian(n) on C^m: x_i acts by diag(weights[j][i])."""
    weights = [list(w) if isinstance(w, (list, tuple)) else [w] for w in weights]
    n = len(weights[0])
    m = len(weights)
    g = abelian(n)
    mats = []
    for i in range(n):
        mm = mat_zero(m)
        for j in range(m):
            mm[j][j] = Fraction(weights[j][i])
        mats.append(mm)
    return Representation(g, mats, name="weights%s" % weights)


def trivial_rep(g, m=1):
    return Representation(g, [mat_zero(m) for _ in range(g.dim)], name="trivial")


BUILTIN_ALGEBRAS = {"sl2": sl2, "gl1": lambda: gl(1), "gl2": lambda: gl(2),
                    "gl3": lambda: gl(3)}


def builtin(name):
    """Built-in algebras by name: sl2, glN, abelianN."""
    if name in BUILTIN_ALGEBRAS:
        return BUILTIN_ALGEBRAS[name]()
    if name.startswith("gl") and name[2:].isdigit():
        return gl(int(name[2:]))
    if name.startswith("abelian") and name[7:].isdigit():
        return abelian(int(name[7:]))
    raise KeyError("unknown Lie algebra %r" % name)


def builtin_rep(g, name):
    """fundamental, adjoint, trivial, or weights:a,b,... for abelian(1)."""
    if name == "adjoint":
        return g.adjoint()
    if name == "trivial":
        return trivial_rep(g)
    if name == "fundamental":
        if g.name == "sl2":
            return sl2_fundamental()
        if g.name.startswith("gl("):
            return gl_fundamental(int(g.name[3:-1]))
    if name.startswith("weights:"):
        ws = [[Fraction(x) for x in part.split("/")] if "/" in part else [Fraction(part)]
              for part in name[8:].split(",")]
        if len(ws[0]) != g.dim:
            raise ValueError("weights must have one entry per basis element")
        r = abelian_weight_rep(ws)
        r.lie = g
        return r
    raise KeyError("unknown representation %r for %s" % (name, g.name))


# ---------------------------------------------------------------------------
# file format

def load_lie_json(path_or_dict):
    """
    Load {"basis": [...], "brackets": [[i, j, k, "c"], ...],
    "representations": {name: [matrix per basis element, row-major strings]}}.
    Indices may be labels or zero-based integers.  Returns (g, {name: rep}).
    """
    if isinstance(path_or_dict, dict):
        data = path_or_dict
    else:
        with open(path_or_dict) as fh:
            data = json.load(fh)
    labels = data["basis"]
    idx = {lab: i for i, lab in enumerate(labels)}
    pos = lambda x: x if isinstance(x, int) else idx[x]
    br = {}
    for i, j, k, c in data.get("brackets", []):
        i, j, k = pos(i), pos(j), pos(k)
        c = _num(c)
        if i > j:
            i, j, c = j, i, -c
        v = br.setdefault((i, j), {})
        v[k] = v.get(k, 0) + c
    g = FiniteLieAlgebra(labels, br, name=data.get("name", "custom"))
    reps = {}
    for name, mats in data.get("representations", {}).items():
        reps[name] = Representation(g, mats, name=name)
    return g, reps
