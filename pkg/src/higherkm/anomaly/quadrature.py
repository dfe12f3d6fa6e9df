"""
The wheel integral

    I_d(ε, L) = ∫_{[ε, L]^d} ε / (ε + t_1 + ... + t_d)^{d+1} dt

whose ε -> 0 limit is the 1/(d+1)! that normalizes the anomaly.  This is
the only floating point code in the package; every value it returns comes
with an error estimate.

Substituting t_i = ε e^{u_i} gives the scale free integrand
Π s_i / (1 + Σ s_i)^{d+1}, s_i = e^{u_i}, on the cube [0, log(L/ε)]^d, which
is smooth and is integrated with an adaptive Genz-Malik 7/5 rule.
"""

import heapq
from fractions import Fraction
from math import factorial, log

import numpy as np


class ToleranceNotReached(RuntimeError):
    def __init__(self, value, error, regions):
        super().__init__("tolerance not reached after %d regions (error %.3g)" % (regions, error))
        self.value = value
        self.error = error
        self.regions = regions


class QuadratureConfig:
    def __init__(self, d, eps=Fraction(1, 10000), L=Fraction(1), tol=1e-6, max_regions=200000):
        self.d = int(d)
        self.eps = Fraction(eps)
        self.L = Fraction(L)
        self.tol = float(tol)
        self.max_regions = int(max_regions)
        if self.d < 1:
            raise ValueError("d must be at least 1")
        if not 0 < self.eps < self.L:
            raise ValueError("need 0 < eps < L")
        if self.tol <= 0:
            raise ValueError("tolerance must be positive")

    def replace(self, **kw):
        args = dict(d=self.d, eps=self.eps, L=self.L, tol=self.tol, max_regions=self.max_regions)
        args.update(kw)
        return QuadratureConfig(**args)


class QuadratureResult:
    def __init__(self, cfg, value, error, regions):
        self.config = cfg
        self.value = value
        self.error = error
        self.regions = regions
        self.target = Fraction(1, factorial(cfg.d + 1))

    def __repr__(self):
        return "QuadratureResult(d=%d, value=%.12g, error=%.2g)" % (self.config.d, self.value, self.error)


class GenzMalik:
    """Degree 7 rule with embedded degree 5 rule on axis-parallel boxes."""

    def __init__(self, d):
        self.d = d
        l2, l3, l4, l5 = np.sqrt(9 / 70), np.sqrt(9 / 10), np.sqrt(9 / 10), np.sqrt(9 / 19)
        pts, w7, w5 = [np.zeros(d)], [(12824 - 9120 * d + 400 * d * d) / 19683], \
            [(729 - 950 * d + 50 * d * d) / 729]
        for lam, a, b in ((l2, 980 / 6561, 245 / 486), (l3, (1820 - 400 * d) / 19683, (265 - 100 * d) / 1458)):
            for i in range(d):
                for s in (1, -1):
                    p = np.zeros(d)
                    p[i] = s * lam
                    pts.append(p)
                    w7.append(a)
                    w5.append(b)
        for i in range(d):
            for j in range(i + 1, d):
                for si in (1, -1):
                    for sj in (1, -1):
                        p = np.zeros(d)
                        p[i], p[j] = si * l4, sj * l4
                        pts.append(p)
                        w7.append(200 / 19683)
                        w5.append(25 / 729)
        for k in range(2 ** d):
            pts.append(np.array([l5 if (k >> i) & 1 else -l5 for i in range(d)]))
            w7.append(6859 / 19683 / 2 ** d)
            w5.append(0.0)
        self.points = np.array(pts)
        self.w7 = np.array(w7)
        self.w5 = np.array(w5)
        self.ratio = (l2 / l3) ** 2

    def apply(self, f, center, half):
        x = center + self.points * half
        fx = f(x)
        vol = float(np.prod(2 * half))
        i7 = vol * float(fx @ self.w7)
        i5 = vol * float(fx @ self.w5)
        # fourth differences along each axis pick the split direction
        d = self.d
        f0 = fx[0]
        a = fx[1:1 + 2 * d].reshape(d, 2).sum(axis=1)
        b = fx[1 + 2 * d:1 + 4 * d].reshape(d, 2).sum(axis=1)
        diff = np.abs(a - 2 * f0 - self.ratio * (b - 2 * f0))
        return i7, abs(i7 - i5), int(np.argmax(diff))


def adaptive_cubature(f, lower, upper, tol, max_regions=200000):
    """
    Global adaptive integration of a vectorized f (rows are points) over
    a box.  Returns (value, error estimate, regions).
    """
    lower = np.asarray(lower, float)
    upper = np.asarray(upper, float)
    rule = GenzMalik(len(lower))
    center, half = (lower + upper) / 2, (upper - lower) / 2
    val, err, ax = rule.apply(f, center, half)
    heap = [(-err, 0, center, half, val, ax)]
    total, total_err, n, tick = val, err, 1, 1
    while total_err > tol:
        if n >= max_regions:
            raise ToleranceNotReached(total, total_err, n)
        neg_e, _, c, h, v, ax = heapq.heappop(heap)
        total -= v
        total_err += neg_e
        h2 = h.copy()
        h2[ax] /= 2
        for s in (-1, 1):
            c2 = c.copy()
            c2[ax] += s * h2[ax]
            v2, e2, a2 = rule.apply(f, c2, h2)
            total += v2
            total_err += e2
            heapq.heappush(heap, (-e2, tick, c2, h2, v2, a2))
            tick += 1
        n += 1
    # resum to shed accumulated rounding
    total = float(sum(item[4] for item in heap))
    total_err = float(sum(-item[0] for item in heap))
    return total, total_err, n


def _wheel_integrand(d):
    def f(u):
        s = np.exp(u)
        return np.prod(s, axis=1) / (1 + s.sum(axis=1)) ** (d + 1)
    return f


def wheel_integral(cfg):
    """Adaptive value of I_d(ε, L); raises ToleranceNotReached at the region limit."""
    U = log(cfg.L / cfg.eps)
    d = cfg.d
    val, err, n = adaptive_cubature(_wheel_integrand(d), [0.0] * d, [U] * d, cfg.tol, cfg.max_regions)
    return QuadratureResult(cfg, val, err, n)


def wheel_integral_exact_d1(eps, L):
    """I_1(ε, L) = 1/2 - ε/(ε + L), exactly.  ε = L gives the empty domain."""
    eps, L = Fraction(eps), Fraction(L)
    if not 0 < eps <= L:
        raise ValueError("need 0 < eps <= L")
    if eps == L:
        return Fraction(0)
    return Fraction(1, 2) - eps / (eps + L)


def extrapolate_eps(cfg, levels=3):
    """
    Values at ε, ε/2, ε/4, ... and the Richardson sequence 2 I(ε/2) - I(ε),
    which removes the first order term in ε.
    """
    runs = [wheel_integral(cfg.replace(eps=cfg.eps / 2 ** k)) for k in range(levels)]
    rich = [2 * b.value - a.value for a, b in zip(runs, runs[1:])]
    rich_err = [2 * b.error + a.error for a, b in zip(runs, runs[1:])]
    return runs, rich, rich_err
