"""
Elements of the Jouanolou algebra A_d.

An element is  Σ c · z^a z*^b dz_S dz*_T / (zz*)^k  with a single common
denominator exponent k.  Terms are keyed by (a, b, S, T) where a, b are
exponent tuples of length d and S, T are increasing tuples of zero-based
indices.  Coefficients are exact field elements (int, Fraction or Scalar).

Sign rule: the bigrading is respected, so moving an element of bidegree
(p, q) past one of bidegree (p', q') costs (-1)^(pp' + qq').  In particular
dz_i and dz*_j commute, the dz's anticommute among themselves and so do the
dz*'s.  With this rule del and dbar commute.
"""

from fractions import Fraction
import re

from ..core.scalar import Scalar, parse_scalar, format_scalar


def _merge_sign(S, S2):
    """Sign and result of the wedge dz_S ∧ dz_S2 (0 when they overlap)."""
    if not S2:
        return 1, S
    if not S:
        return 1, S2
    if set(S) & set(S2):
        return 0, None
    inv = 0
    for s in S:
        for t in S2:
            if t < s:
                inv += 1
    return (-1 if inv & 1 else 1), tuple(sorted(S + S2))


def _insert_sign(i, S):
    """Sign and result of dz_i ∧ dz_S."""
    if i in S:
        return 0, None
    pos = sum(1 for s in S if s < i)
    return (-1 if pos & 1 else 1), tuple(sorted(S + (i,)))


def _tadd(x, y):
    return tuple(u + v for u, v in zip(x, y))


def _e(d, i):
    return tuple(1 if j == i else 0 for j in range(d))


def _grlex_key(ab):
    a, b = ab
    return (sum(a) + sum(b), a + b)


def divide_by_zzs(poly, d):
    """
    Divide a polynomial {(a, b): c} by zz* = Σ z_i z*_i using the division
    algorithm for one divisor under graded lex order with
    z_1 > ... > z_d > z*_1 > ... > z*_d.  Returns (quotient, remainder);
    the remainder stops being collected at its first term, since callers only
    need to know whether it vanishes.
    """
    p = dict(poly)
    q = {}
    while p:
        lt = max(p, key=_grlex_key)
        a, b = lt
        if a[0] == 0 or b[0] == 0:
            return q, {lt: p[lt]}
        c = p[lt]
        qa = (a[0] - 1,) + a[1:]
        qb = (b[0] - 1,) + b[1:]
        q[(qa, qb)] = q.get((qa, qb), 0) + c
        for i in range(d):
            m = (_tadd(qa, _e(d, i)), _tadd(qb, _e(d, i)))
            v = p.get(m, 0) - c
            if v:
                p[m] = v
            else:
                p.pop(m, None)
    return q, {}


def raw_deriv(terms, k, d, holomorphic):
    """
    del (holomorphic=True) or dbar of the numerator terms of N/(zz*)^k,
    returned as numerator terms over (zz*)^(k+1), without normalizing.
    """
    out = {}

    def put(key, c):
        v = out.get(key, 0) + c
        if v:
            out[key] = v
        else:
            out.pop(key, None)

    for (a, b, S, T), c in terms.items():
        for i in range(d):
            if holomorphic:
                sgn, SS = _insert_sign(i, S)
                TT = T
            else:
                sgn, TT = _insert_sign(i, T)
                SS = S
            if not sgn:
                continue
            # ∂_i(z^a z*^b)·zz*  -  k·z^a z*^b·∂_i(zz*)
            x, y = (a, b) if holomorphic else (b, a)
            if x[i]:
                xm = tuple(v - (1 if j == i else 0) for j, v in enumerate(x))
                for j in range(d):
                    x2 = _tadd(xm, _e(d, j))
                    y2 = _tadd(y, _e(d, j))
                    key = (x2, y2) if holomorphic else (y2, x2)
                    put(key + (SS, TT), sgn * x[i] * c)
            if k:
                y2 = _tadd(y, _e(d, i))
                key = (x, y2) if holomorphic else (y2, x)
                put(key + (SS, TT), -sgn * k * c)
    return out


def raw_contraction(terms, d):
    """Euler contraction dz*_t -> z*_t on numerator terms."""
    out = {}
    for (a, b, S, T), c in terms.items():
        for pos, t in enumerate(T):
            key = (a, _tadd(b, _e(d, t)), S, T[:pos] + T[pos + 1:])
            v = out.get(key, 0) + (c if pos % 2 == 0 else -c)
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


class ADElement:
    __slots__ = ("d", "k", "terms")

    def __init__(self, d, terms=None, k=0, normalize=True):
        self.d = d
        self.k = k
        self.terms = {}
        if terms:
            for key, c in terms.items():
                if c:
                    self.terms[key] = c
        if normalize:
            self._normalize()

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, d):
        return cls(d, {}, 0, normalize=False)

    @classmethod
    def constant(cls, d, c):
        z = (0,) * d
        return cls(d, {(z, z, (), ()): c}, 0, normalize=False)

    @classmethod
    def one(cls, d):
        return cls.constant(d, 1)

    @classmethod
    def monomial(cls, d, a=None, b=None, S=(), T=(), k=0, c=1):
        z = (0,) * d
        a = tuple(a) if a is not None else z
        b = tuple(b) if b is not None else z
        return cls(d, {(a, b, tuple(S), tuple(T)): c}, k)

    @classmethod
    def z(cls, d, i):
        return cls.monomial(d, a=_e(d, i))

    @classmethod
    def zs(cls, d, i):
        return cls.monomial(d, b=_e(d, i))

    @classmethod
    def dz(cls, d, i):
        return cls.monomial(d, S=(i,))

    @classmethod
    def dzs(cls, d, i):
        return cls.monomial(d, T=(i,))

    @classmethod
    def zzs_inverse(cls, d, k=1):
        return cls.monomial(d, k=k)

    @classmethod
    def volume(cls, d):
        """dz_1 ∧ ... ∧ dz_d."""
        return cls.monomial(d, S=tuple(range(d)))

    # -- canonical form ---------------------------------------------------
    def _normalize(self):
        d = self.d
        while self.k > 0 and self.terms:
            groups = {}
            for (a, b, S, T), c in self.terms.items():
                groups.setdefault((S, T), {})[(a, b)] = c
            new = {}
            for (S, T), poly in groups.items():
                q, r = divide_by_zzs(poly, d)
                if r:
                    return
                for (a, b), c in q.items():
                    if c:
                        new[(a, b, S, T)] = c
            self.terms = new
            self.k -= 1
        if not self.terms:
            self.k = 0

    def lift(self, K):
        """Numerator terms of the same element written over (zz*)^K, K >= k."""
        if K < self.k:
            raise ValueError("cannot lower the denominator below canonical k")
        terms = dict(self.terms)
        d = self.d
        for _ in range(K - self.k):
            new = {}
            for (a, b, S, T), c in terms.items():
                for i in range(d):
                    key = (_tadd(a, _e(d, i)), _tadd(b, _e(d, i)), S, T)
                    v = new.get(key, 0) + c
                    if v:
                        new[key] = v
                    else:
                        new.pop(key, None)
            terms = new
        return terms

    # -- structure --------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def bidegrees(self):
        return sorted({(len(S), len(T)) for (_, _, S, T) in self.terms})

    def bidegree(self):
        """The unique bidegree of a homogeneous element (None for zero)."""
        bd = self.bidegrees()
        if not bd:
            return None
        if len(bd) > 1:
            raise ValueError("element is not bihomogeneous: %s" % bd)
        return bd[0]

    def degree(self):
        bd = self.bidegree()
        return 0 if bd is None else bd[0] + bd[1]

    def component(self, p, q):
        t = {key: c for key, c in self.terms.items()
             if len(key[2]) == p and len(key[3]) == q}
        return ADElement(self.d, t, self.k)

    @staticmethod
    def term_weight(key):
        a, b, S, T = key
        w = [x - y for x, y in zip(a, b)]
        for s in S:
            w[s] += 1
        for t in T:
            w[t] -= 1
        return tuple(w)

    def weights(self):
        return sorted({self.term_weight(key) for key in self.terms})

    def weight_component(self, w):
        w = tuple(w)
        t = {key: c for key, c in self.terms.items() if self.term_weight(key) == w}
        return ADElement(self.d, t, self.k)

    # -- arithmetic -------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, ADElement):
            raise TypeError("expected ADElement")
        if other.d != self.d:
            raise ValueError("dimension mismatch %d vs %d" % (self.d, other.d))

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = ADElement.constant(self.d, other)
        self._check(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        K = max(self.k, other.k)
        t = self.lift(K)
        for key, c in other.lift(K).items():
            v = t.get(key, 0) + c
            if v:
                t[key] = v
            else:
                t.pop(key, None)
        return ADElement(self.d, t, K)

    __radd__ = __add__

    def __neg__(self):
        return ADElement(self.d, {key: -c for key, c in self.terms.items()}, self.k,
                         normalize=False)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        if not c:
            return ADElement.zero(self.d)
        return ADElement(self.d, {key: c * x for key, x in self.terms.items()}, self.k,
                         normalize=False)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        self._check(other)
        out = {}
        for (a, b, S, T), c in self.terms.items():
            for (a2, b2, S2, T2), c2 in other.terms.items():
                s1, SS = _merge_sign(S, S2)
                if not s1:
                    continue
                s2, TT = _merge_sign(T, T2)
                if not s2:
                    continue
                key = (_tadd(a, a2), _tadd(b, b2), SS, TT)
                v = out.get(key, 0) + (c * c2 if s1 * s2 == 1 else -(c * c2))
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return ADElement(self.d, out, self.k + other.k)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        r = ADElement.one(self.d)
        for _ in range(n):
            r = r * self
        return r

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = ADElement.constant(self.d, other)
        if not isinstance(other, ADElement):
            return NotImplemented
        return (self.d == other.d and (self - other).is_zero())

    def __hash__(self):
        raise TypeError("ADElement is not hashable")

    # -- differentials ----------------------------------------------------
    def _deriv(self, holomorphic):
        return ADElement(self.d, raw_deriv(self.terms, self.k, self.d, holomorphic),
                         self.k + 1)

    def dbar(self):
        return self._deriv(False)

    def del_(self):
        return self._deriv(True)

    # -- Euler contraction and membership --------------------------------
    def euler_contraction(self):
        """
        Interior product with ξ = Σ z*_i ∂/∂z*_i: dz*_t ↦ z*_t, as a
        derivation of bidegree (0, -1) applied from the left.
        """
        return ADElement(self.d, raw_contraction(self.terms, self.d), self.k)

    def zs_degree_ok(self):
        for (a, b, S, T) in self.terms:
            if sum(b) - self.k != -len(T):
                return False
        return True

    def in_A(self, p=None, q=None):
        """Membership in A_d (and in A^{p,q} when p, q are given)."""
        if p is not None:
            for (_, _, S, T) in self.terms:
                if len(S) != p or len(T) != q:
                    return False
        return self.zs_degree_ok() and self.euler_contraction().is_zero()

    # -- d = 1 Laurent view -------------------------------------------
    def to_laurent(self):
        """
        For d = 1 elements of A^{0,0} (or A^{1,0}): {exponent n: coefficient}
        of z^n (times dz).  Raises if a term is not of the form z^a z*^k/(zz*)^k.
        """
        if self.d != 1:
            raise ValueError("Laurent view needs d = 1")
        out = {}
        for (a, b, S, T), c in self.terms.items():
            if T or b[0] != self.k:
                raise ValueError("term is not a Laurent monomial")
            out[a[0] - self.k] = out.get(a[0] - self.k, 0) + c
        return {n: c for n, c in out.items() if c}

    @classmethod
    def from_laurent(cls, coeffs, dz=False):
        """d = 1 element Σ c_n z^n (dz)."""
        if not coeffs:
            return cls.zero(1)
        kmax = max(0, -min(coeffs))
        S = (0,) if dz else ()
        t = {((n + kmax,), (kmax,), S, ()): c for n, c in coeffs.items() if c}
        return cls(1, t, kmax)

    # -- text -------------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda kv: (kv[0][2], kv[0][3], kv[0][0], kv[0][1]))

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return "ADElement(d=%d, %s)" % (self.d, format_element(self))


def _fmt_coef(c):
    s = format_scalar(Scalar(c)) if not isinstance(c, Scalar) else format_scalar(c)
    if re.fullmatch(r"-?\d+(/\d+)?", s):
        return s
    return "(" + s + ")"


def format_element(x):
    if not x.terms:
        return "0"
    out = []
    for (a, b, S, T), c in x.sorted_terms():
        parts = [_fmt_coef(c)]
        mono = []
        for i, e in enumerate(a):
            if e:
                mono.append("z%d" % (i + 1) if e == 1 else "z%d^%d" % (i + 1, e))
        for i, e in enumerate(b):
            if e:
                mono.append("zs%d" % (i + 1) if e == 1 else "zs%d^%d" % (i + 1, e))
        if mono:
            parts.append("*".join(mono))
        parts += ["dz%d" % (i + 1) for i in S]
        parts += ["dzs%d" % (i + 1) for i in T]
        s = " * ".join(parts)
        if x.k:
            s += " / (zzs)^%d" % x.k
        out.append(s)
    return " + ".join(out)


def _split_top(text, sep):
    depth = 0
    out, cur = [], []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and text.startswith(sep, i):
            out.append("".join(cur))
            cur = []
            i += len(sep)
            continue
        cur.append(ch)
        i += 1
    out.append("".join(cur))
    return out


_FACTOR = re.compile(r"^(dzs|dz|zs|z)(\d+)(?:\^(\d+))?$")


def parse_element(text, d):
    """Inverse of ``format_element`` for a known dimension d."""
    text = text.strip()
    if text == "0":
        return ADElement.zero(d)
    terms = {}
    kk = None
    for chunk in _split_top(text, " + "):
        chunk = chunk.strip()
        k = 0
        m = re.search(r"/\s*\(zzs\)\^(\d+)\s*$", chunk)
        if m:
            k = int(m.group(1))
            chunk = chunk[:m.start()].strip()
        if kk is None:
            kk = k
        elif kk != k:
            raise ValueError("terms with different denominators")
        factors = [f.strip() for f in _split_top(chunk, "*")]
        coef = Scalar(1)
        a = [0] * d
        b = [0] * d
        S, T = [], []
        first = True
        for f in factors:
            if not f:
                raise ValueError("empty factor in %r" % chunk)
            fm = _FACTOR.match(f)
            if fm is None:
                if not first:
                    raise ValueError("coefficient must come first: %r" % f)
                coef = parse_scalar(f[1:-1] if f.startswith("(") else f)
                first = False
                continue
            first = False
            kind, idx, e = fm.group(1), int(fm.group(2)) - 1, int(fm.group(3) or 1)
            if not 0 <= idx < d:
                raise ValueError("index out of range in %r" % f)
            if kind == "z":
                a[idx] += e
            elif kind == "zs":
                b[idx] += e
            elif kind == "dz":
                S.append(idx)
            else:
                T.append(idx)
        if S != sorted(S) or T != sorted(T) or len(set(S)) < len(S) or len(set(T)) < len(T):
            raise ValueError("dz factors must be strictly increasing")
        if coef.is_rational():
            coef = coef.to_fraction()
        key = (tuple(a), tuple(b), tuple(S), tuple(T))
        v = terms.get(key, 0) + coef
        terms[key] = v
    return ADElement(d, terms, kk or 0)
