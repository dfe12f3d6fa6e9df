"""
Exact scalars: rational functions in one formal constant ``tau``.

``tau`` stands for 2*pi*i.  Numerator and denominator are stored as tuples of
Python ints (coefficients, lowest power first).  Canonical form: the two
polynomials are coprime over Q, their combined integer content is 1 and the
leading coefficient of the denominator is positive.
"""

from fractions import Fraction
from math import gcd
import re


# ---------------------------------------------------------------------------
# integer polynomial helpers (tuples, low degree first)

def _strip(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _padd(p, q):
    if len(p) < len(q):
        p, q = q, p
    r = list(p)
    for i, c in enumerate(q):
        r[i] += c
    return _strip(r)


def _pneg(p):
    return tuple(-c for c in p)


def _pmul(p, q):
    if not p or not q:
        return ()
    if len(p) == 1:
        a = p[0]
        return tuple(a * c for c in q)
    if len(q) == 1:
        a = q[0]
        return tuple(a * c for c in p)
    r = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                r[i + j] += a * b
    return tuple(r)


def _content(p):
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def _low(p):
    for i, c in enumerate(p):
        if c:
            return i
    return len(p)


def _is_monomial(p):
    return _low(p) == len(p) - 1


def _qdivmod(p, q):
    """Division with remainder over Q; returns Fraction coefficient lists."""
    p = [Fraction(c) for c in p]
    q = [Fraction(c) for c in q]
    out = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    while len(p) >= len(q) and any(p):
        shift = len(p) - len(q)
        c = p[-1] / lead
        out[shift] = c
        for i, b in enumerate(q):
            p[i + shift] -= c * b
        while p and p[-1] == 0:
            p.pop()
    return out, p


def _primitive(p):
    """Clear denominators of a Fraction list and divide by content."""
    if not p:
        return ()
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    r = [int(c * den) for c in p]
    g = _content(r)
    return _strip(tuple(c // g for c in r))


def _pgcd(p, q):
    """Primitive gcd of two integer polynomials (Euclid over Q)."""
    a, b = p, q
    while b:
        _, r = _qdivmod(a, b)
        a, b = b, _primitive(r)
    a = _primitive([Fraction(c) for c in a])
    if a and a[-1] < 0:
        a = _pneg(a)
    return a


def _pexact_div(p, q):
    out, r = _qdivmod(p, q)
    assert not any(r), "inexact polynomial division"
    return tuple(int(c) if c.denominator == 1 else c for c in out)


# ---------------------------------------------------------------------------

class Scalar:
    """Element of Q(tau).  Immutable and hashable."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, value=0, den=None, _canonical=False):
        if den is None:
            if isinstance(value, Scalar):
                self.num, self.den = value.num, value.den
                self._hash = None
                return
            if isinstance(value, int):
                num, den = ((value,) if value else ()), (1,)
                _canonical = True
            elif isinstance(value, Fraction):
                num = (value.numerator,) if value else ()
                den = (value.denominator,)
                _canonical = True
            elif isinstance(value, str):
                s = parse_scalar(value)
                self.num, self.den = s.num, s.den
                self._hash = None
                return
            else:
                raise TypeError("cannot make a Scalar from %r" % (value,))
        else:
            num = value
        if not _canonical:
            num, den = _canon(tuple(num), tuple(den))
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def tau_power(cls, n, coeff=1):
        """coeff * tau**n for an integer n (possibly negative)."""
        c = Fraction(coeff)
        if c == 0:
            return ZERO
        if n >= 0:
            num = (0,) * n + (c.numerator,)
            den = (c.denominator,)
        else:
            num = (c.numerator,)
            den = (0,) * (-n) + (c.denominator,)
        return cls(num, den)

    # -- predicates -------------------------------------------------------
    def __bool__(self):
        return bool(self.num)

    def is_rational(self):
        return len(self.num) <= 1 and len(self.den) == 1

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError("%s depends on tau" % self)
        if not self.num:
            return Fraction(0)
        return Fraction(self.num[0], self.den[0])

    def tau_valuation(self):
        """Exponent n when the scalar is c*tau^n, else None."""
        if not self.num:
            return None
        if _is_monomial(self.num) and _is_monomial(self.den):
            return (len(self.num) - 1) - (len(self.den) - 1)
        return None

    def leading_coefficient(self):
        """The rational c when the scalar is c*tau^n."""
        n = self.tau_valuation()
        if n is None:
            raise ValueError("%s is not a monomial in tau" % self)
        return Fraction(self.num[-1], self.den[-1])

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                other = Scalar(other)
            else:
                return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            if self.den == (1,):
                return Scalar(_padd(self.num, other.num), (1,), _canonical=True)
            return Scalar(_padd(self.num, other.num), self.den)
        num = _padd(_pmul(self.num, other.den), _pmul(other.num, self.den))
        return Scalar(num, _pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(_pneg(self.num), self.den, _canonical=True)

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                other = Scalar(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, int):
                if other == 1:
                    return self
                if other == -1:
                    return -self
                if not other or not self.num:
                    return ZERO
                if self.den == (1,):
                    return Scalar(tuple(other * c for c in self.num), (1,), _canonical=True)
                other = Scalar(other)
            elif isinstance(other, Fraction):
                other = Scalar(other)
            else:
                return NotImplemented
        if not self.num or not other.num:
            return ZERO
        if self.den == (1,) and other.den == (1,) and len(self.num) == 1 and len(other.num) == 1:
            return Scalar((self.num[0] * other.num[0],), (1,), _canonical=True)
        return Scalar(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero Scalar")
        return Scalar(self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                other = Scalar(other)
            else:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar(other) * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        r = ONE
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    # -- comparison / hashing -------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == Scalar(other)
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        if r is NotImplemented:
            return r
        return not r

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def evaluate(self, tau):
        """Numeric value (complex) with tau substituted."""
        n = sum(c * tau ** i for i, c in enumerate(self.num))
        d = sum(c * tau ** i for i, c in enumerate(self.den))
        return n / d

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return "Scalar(%r)" % str(self)


def _canon(num, den):
    num = _strip(num)
    den = _strip(den)
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return (), (1,)
    if len(den) == 1 and len(num) == 1:
        g = gcd(num[0], den[0])
        n, d = num[0] // g, den[0] // g
        if d < 0:
            n, d = -n, -d
        return (n,), (d,)
    if _is_monomial(den):
        # strip the common power of tau
        v = min(_low(num), len(den) - 1)
        if v:
            num = num[v:]
            den = den[v:]
        if len(den) > 1 or len(num) > 1:
            g = gcd(_content(num), den[-1])
            if den[-1] < 0:
                g = -g
            return tuple(c // g for c in num), tuple(c // g for c in den)
        return _canon(num, den)
    g = _pgcd(num, den)
    if len(g) > 1:
        num = _pexact_div(num, g)
        den = _pexact_div(den, g)
        if any(isinstance(c, Fraction) for c in num + den):
            fr = [Fraction(c) for c in num + den]
            m = 1
            for c in fr:
                m = m * c.denominator // gcd(m, c.denominator)
            num = tuple(int(Fraction(c) * m) for c in num)
            den = tuple(int(Fraction(c) * m) for c in den)
    c = gcd(_content(num), _content(den))
    if den[-1] < 0:
        c = -c
    return tuple(x // c for x in num), tuple(x // c for x in den)


ZERO = Scalar((), (1,), _canonical=True)
ONE = Scalar((1,), (1,), _canonical=True)
TAU = Scalar((0, 1), (1,), _canonical=True)


def as_scalar(x):
    if isinstance(x, Scalar):
        return x
    return Scalar(x)


# ---------------------------------------------------------------------------
# text format: "3/2*tau^-2", "1 + tau", "(1 + tau)/(2*tau^2)"

def _fmt_term(c, k):
    sign = "-" if c < 0 else "+"
    c = abs(c)
    if k == 0:
        return sign, str(c)
    t = "tau" if k == 1 else "tau^%d" % k
    if c == 1:
        return sign, t
    return sign, "%s*%s" % (c, t)


def _fmt_poly(terms):
    out = []
    for i, (c, k) in enumerate(terms):
        sign, body = _fmt_term(c, k)
        if i == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(" %s %s" % (sign, body))
    return "".join(out) if out else "0"


def format_scalar(s):
    if not s.num:
        return "0"
    if _is_monomial(s.den):
        shift = len(s.den) - 1
        lead = s.den[-1]
        terms = [(Fraction(c, lead), i - shift) for i, c in enumerate(s.num) if c]
        return _fmt_poly(terms)
    n = _fmt_poly([(Fraction(c), i) for i, c in enumerate(s.num) if c])
    d = _fmt_poly([(Fraction(c), i) for i, c in enumerate(s.den) if c])
    return "(%s)/(%s)" % (n, d)


_TOKEN = re.compile(r"\s*(?:(\d+)|(tau)|(\*\*|[-+*/^()]))")


def _tokenize(text):
    pos = 0
    toks = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError("bad scalar %r at %d" % (text, pos))
        if m.group(1):
            toks.append(("num", int(m.group(1))))
        elif m.group(2):
            toks.append(("tau", None))
        else:
            op = m.group(3)
            toks.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, toks):
        self.toks = toks
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expr(self):
        kind, val = self.peek()
        neg = False
        if kind == "op" and val in "+-":
            self.take()
            neg = val == "-"
        r = self.term()
        if neg:
            r = -r
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                r = r + t if val == "+" else r - t
            else:
                return r

    def term(self):
        r = self.power()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                f = self.power()
                r = r * f if val == "*" else r / f
            else:
                return r

    def power(self):
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            sign = 1
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                sign = -1 if val == "-" else 1
            kind, val = self.take()
            if kind != "num":
                raise ValueError("integer exponent expected")
            return base ** (sign * val)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return Scalar(val)
        if kind == "tau":
            return TAU
        if kind == "op" and val == "(":
            r = self.expr()
            kind, val = self.take()
            if val != ")":
                raise ValueError("unbalanced parenthesis")
            return r
        if kind == "op" and val == "-":
            return -self.atom()
        raise ValueError("unexpected token %r" % (val,))


def parse_scalar(text):
    """Inverse of ``format_scalar``."""
    p = _Parser(_tokenize(text))
    r = p.expr()
    if p.i != len(p.toks):
        raise ValueError("trailing input in %r" % text)
    return r
