from fractions import Fraction
from math import factorial

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from higherkm.core import Scalar
from higherkm.currents import sl2_fundamental, abelian_weight_rep, gl_fundamental, theta_kN
from higherkm.anomaly import (QuadratureConfig, ToleranceNotReached, GenzMalik, adaptive_cubature,
                              wheel_integral, wheel_integral_exact_d1, extrapolate_eps,
                              anomaly_coefficient)

from oracles import wheel_exact


# -- the cubature rule -------------------------------------------------------------

@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_genz_malik_degree_seven(d):
    rng = np.random.default_rng(d)
    exps = rng.integers(0, 4, size=(5, d))
    exps[0] = 0
    exps[1, 0] = 7 if d == 1 else exps[1, 0]
    coef = rng.normal(size=5)
    keep = exps.sum(axis=1) <= 7
    exps, coef = exps[keep], coef[keep]
    f = lambda x: sum(c * np.prod(x ** e, axis=1) for c, e in zip(coef, exps))
    lo, hi = np.zeros(d), np.full(d, 1.5)
    exact = sum(c * np.prod(hi ** (e + 1) / (e + 1)) for c, e in zip(coef, exps))
    val, _, _ = GenzMalik(d).apply(f, (lo + hi) / 2, (hi - lo) / 2)
    assert val == pytest.approx(exact, rel=1e-12, abs=1e-12)


def test_adaptive_cubature_smooth():
    f = lambda x: np.exp(-np.sum(x ** 2, axis=1))
    val, err, _ = adaptive_cubature(f, [-3, -3], [3, 3], 1e-9)
    from math import erf, pi
    assert abs(val - pi * erf(3) ** 2) < 1e-8 and err <= 1e-9


# -- the wheel integral ---------------------------------------------------------------

def test_exact_d1_examples():
    assert wheel_integral_exact_d1(Fraction(1, 2), 1) == Fraction(1, 6)
    assert wheel_integral_exact_d1(1, 1) == 0
    assert abs(wheel_integral_exact_d1(Fraction(1, 10 ** 9), 1) - Fraction(1, 2)) < Fraction(1, 10 ** 8)
    with pytest.raises(ValueError):
        wheel_integral_exact_d1(2, 1)


@pytest.mark.parametrize("eps", [Fraction(1, 10), Fraction(1, 1000), Fraction(1, 10 ** 6)])
def test_d1_against_exact(eps):
    r = wheel_integral(QuadratureConfig(1, eps=eps, tol=1e-12))
    assert abs(r.value - float(wheel_integral_exact_d1(eps, 1))) < 1e-9


@pytest.mark.parametrize("d,eps", [(1, Fraction(1, 100)), (2, Fraction(1, 100)), (2, Fraction(1, 1000)),
                                   (3, Fraction(1, 50))])
def test_against_inclusion_exclusion_oracle(d, eps):
    r = wheel_integral(QuadratureConfig(d, eps=eps, tol=1e-8))
    assert abs(r.value - float(wheel_exact(d, eps, 1))) < 1e-7


@given(st.integers(1, 3), st.fractions(Fraction(1, 1000), Fraction(1, 4)))
@settings(max_examples=10, deadline=None)
def test_oracle_bounds_and_limit(d, eps):
    # 0 < I_d < 1/(d+1)! and I_d grows as ε shrinks
    a = wheel_exact(d, eps, 1)
    b = wheel_exact(d, eps / 2, 1)
    assert 0 < a < b < Fraction(1, factorial(d + 1))


def test_wheel_scales_with_ratio():
    # I depends only on L/ε
    a = wheel_integral(QuadratureConfig(2, eps=Fraction(1, 100), L=1, tol=1e-9)).value
    b = wheel_integral(QuadratureConfig(2, eps=Fraction(1, 50), L=2, tol=1e-9)).value
    assert a == pytest.approx(b, abs=1e-9)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_limit_is_inverse_factorial(d):
    cfg = QuadratureConfig(d, eps=Fraction(1, 4000), tol=1e-8)
    runs, rich, err = extrapolate_eps(cfg, levels=3)
    assert abs(rich[-1] - 1 / factorial(d + 1)) < 1e-6
    assert runs[0].target == Fraction(1, factorial(d + 1))


def test_config_validation():
    with pytest.raises(ValueError):
        QuadratureConfig(2, eps=Fraction(2), L=1)
    with pytest.raises(ValueError):
        QuadratureConfig(2, tol=0)
    with pytest.raises(ValueError):
        QuadratureConfig(0)


def test_tolerance_not_reached():
    with pytest.raises(ToleranceNotReached) as e:
        wheel_integral(QuadratureConfig(3, eps=Fraction(1, 10 ** 6), tol=1e-12, max_regions=20))
    assert e.value.regions == 20 and e.value.error > 1e-12


# -- the coefficient ----------------------------------------------------------------

def test_anomaly_coefficient_examples():
    ch, pre = anomaly_coefficient(sl2_fundamental(), 1)
    assert pre == Scalar.tau_power(-1)
    assert ch.values == {(0, 2): Fraction(1, 2), (1, 1): Fraction(1)}
    lam = Fraction(2)
    ch, pre = anomaly_coefficient(abelian_weight_rep([[lam]]), 2)
    assert ch.values == {(0, 0, 0): lam ** 3 / 6} and pre == Scalar.tau_power(-2)
    ch, _ = anomaly_coefficient(gl_fundamental(2), 2)
    assert ch == theta_kN(3, 2).scale(Fraction(1, 6))
    with pytest.raises(ValueError):
        anomaly_coefficient(sl2_fundamental(), 0)
