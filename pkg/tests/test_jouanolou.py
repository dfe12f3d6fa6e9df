import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from higherkm.core import Scalar, TAU
from higherkm.jouanolou import (ADElement, WeightWindow, WindowTooSmall, UnstableWindow, bm_kernel,
                                residue, cohomology_ad, random_element, parse_element,
                                format_element, normalize, check_membership, divide_by_zzs)

from oracles import sphere_pairing

E = ADElement


def _rand(d, rng, p=None, q=None):
    p = rng.randint(0, d) if p is None else p
    q = rng.randint(0, d - 1) if q is None else q
    w = tuple(rng.randint(-2, 2) for _ in range(d))
    K = max(0, -sum(w) + p, q) + rng.randint(0, 1)
    return random_element(d, p, q, w, K, rng)


seeds = st.integers(0, 10 ** 6)
dims = st.sampled_from([1, 2, 3])


# -- normal form ---------------------------------------------------------------

def test_normalize_examples():
    d = 2
    zzs = {((1, 0), (1, 0), (), ()): 1, ((0, 1), (0, 1), (), ()): 1}
    assert normalize(d, zzs, 1) == E.one(d)
    assert normalize(d, zzs, 1).k == 0
    z1 = normalize(d, {((1, 0), (0, 0), (), ()): 1}, 0)
    assert z1.k == 0 and z1 == E.z(d, 0)
    # (zz*)^2 z*_1 / (zz*)^3 -> z*_1 / (zz*)
    zz = E.z(d, 0) * E.zs(d, 0) + E.z(d, 1) * E.zs(d, 1)
    x = (zz * zz * E.zs(d, 0)) * E.zzs_inverse(d, 3)
    assert x.k == 1 and x == E.zs(d, 0) * E.zzs_inverse(d, 1)


def test_single_divisor_division():
    # z1 z1* + z2 z2* divides itself with remainder zero
    q, r = divide_by_zzs({((1, 0), (1, 0)): 1, ((0, 1), (0, 1)): 1}, 2)
    assert not r and q == {((0, 0), (0, 0)): 1}


# -- products ------------------------------------------------------------------

def test_product_examples():
    d = 2
    assert (E.dzs(d, 0) * E.dzs(d, 0)).is_zero()
    assert E.dzs(d, 0) * E.dzs(d, 1) == -(E.dzs(d, 1) * E.dzs(d, 0))
    a = E.zs(d, 0) * E.zzs_inverse(d)
    b = E.zs(d, 1) * E.zzs_inverse(d)
    assert a * b == E.monomial(d, b=(1, 1), k=2)


@given(seeds, dims)
@settings(max_examples=40, deadline=None)
def test_bigraded_commutativity(seed, d):
    rng = random.Random(seed)
    a, b = _rand(d, rng), _rand(d, rng)
    (p, q), (p2, q2) = a.bidegree() or (0, 0), b.bidegree() or (0, 0)
    assert a * b == (b * a).scale((-1) ** (p * p2 + q * q2))


@given(seeds, dims)
@settings(max_examples=40, deadline=None)
def test_membership_is_multiplicative(seed, d):
    rng = random.Random(seed)
    a, b = _rand(d, rng), _rand(d, rng)
    assert a.in_A() and b.in_A()
    assert (a * b).in_A()


# -- differentials ---------------------------------------------------------------

def test_dbar_examples():
    d = 2
    assert E.z(d, 0).dbar().is_zero()
    lhs = E.zzs_inverse(d).dbar()
    rhs = (E.z(d, 0) * E.dzs(d, 0) + E.z(d, 1) * E.dzs(d, 1)).scale(-1) * E.zzs_inverse(d, 2)
    assert lhs == rhs
    for d in (1, 2, 3):
        assert bm_kernel(d).dbar().is_zero()


@given(seeds, dims)
@settings(max_examples=60, deadline=None)
def test_differentials_square_to_zero_and_commute(seed, d):
    a = _rand(d, random.Random(seed))
    assert a.dbar().dbar().is_zero()
    assert a.del_().del_().is_zero()
    assert a.dbar().del_() == a.del_().dbar()


@given(seeds, dims)
@settings(max_examples=40, deadline=None)
def test_leibniz(seed, d):
    rng = random.Random(seed)
    a, b = _rand(d, rng), _rand(d, rng)
    p, q = a.bidegree() or (0, 0)
    assert (a * b).dbar() == a.dbar() * b + (a * b.dbar()).scale((-1) ** q)
    assert (a * b).del_() == a.del_() * b + (a * b.del_()).scale((-1) ** p)


# -- membership ------------------------------------------------------------------

def test_membership_examples():
    for d in (1, 2, 3):
        assert check_membership(bm_kernel(d), 0, d - 1)
        assert bm_kernel(d).bidegree() == (0, d - 1)
        assert check_membership(E.one(d), 0, 0)
    assert not check_membership(E.dzs(1, 0), 0, 1)
    assert not check_membership(E.zs(2, 0), 0, 0)


def test_bm_examples():
    assert bm_kernel(1) == E.monomial(1, b=(1,), k=1, c=Scalar.tau_power(-1))
    # the same element written as z^-1 in the Laurent picture
    assert bm_kernel(1).to_laurent() == {-1: Scalar.tau_power(-1)}
    d2 = (E.zs(2, 0) * E.dzs(2, 1) - E.zs(2, 1) * E.dzs(2, 0)) * E.zzs_inverse(2, 2)
    assert bm_kernel(2) == d2.scale(Scalar.tau_power(-2))


@given(seeds)
@settings(max_examples=40, deadline=None)
def test_d1_collapse(seed):
    rng = random.Random(seed)
    a = _rand(1, rng, p=0, q=0)
    lau = a.to_laurent()
    assert E.from_laurent(lau) == a


def test_d1_has_no_01_part():
    win = WeightWindow.cube(1, 3)
    dims = cohomology_ad(win, 0, [0, 1])
    assert all(v == 1 for (q, w), v in dims.items() if q == 0)
    assert all(v == 0 for (q, w), v in dims.items() if q == 1)


# -- text format ------------------------------------------------------------------

@given(seeds, dims)
@settings(max_examples=60, deadline=None)
def test_format_roundtrip(seed, d):
    a = _rand(d, random.Random(seed))
    if random.Random(seed).random() < 0.5:
        a = a.scale(TAU + Fraction(1, 3))
    text = format_element(a)
    b = parse_element(text, d)
    assert b == a
    assert format_element(b) == text


def test_format_example():
    x = E.zs(2, 0) * E.dzs(2, 1) * E.zzs_inverse(2, 2)
    text = format_element(x)
    assert "zs1" in text and "dzs2" in text and "(zzs)^2" in text


# -- residue ----------------------------------------------------------------------

@pytest.mark.parametrize("d", [1, 2, 3])
def test_residue_reproducing(d):
    bm = bm_kernel(d) * E.volume(d)
    for a in product(range(4), repeat=d):
        if sum(a) <= 3:
            assert residue(E.monomial(d, a=a) * bm) == (1 if not any(a) else 0)


@pytest.mark.parametrize("d", [2, 3])
def test_residue_kills_exact(d):
    rng = random.Random(d)
    for _ in range(30):
        beta = random_element(d, d, d - 2, (0,) * d, d + rng.randint(0, 1), rng)
        assert residue(beta.dbar()) == 0


@pytest.mark.parametrize("d", [1, 2, 3])
def test_residue_matches_sphere_integral(d):
    rng = random.Random(10 + d)
    ref = sphere_pairing(bm_kernel(d) * E.volume(d))
    for _ in range(25):
        w = (0,) * d if rng.random() < 0.7 else tuple(rng.randint(-1, 1) for _ in range(d))
        om = random_element(d, d, d - 1, w, d + rng.randint(0, 2), rng)
        assert residue(om) == sphere_pairing(om) / ref


def test_residue_nonzero_weight_vanishes():
    d = 2
    om = E.z(d, 0) * bm_kernel(d) * E.volume(d) * E.z(d, 1)
    assert om.weights() and (0, 0) not in om.weights()
    assert residue(om) == 0


def test_residue_window_too_small():
    om = bm_kernel(2) * E.volume(2) * E.zzs_inverse(2, 3)
    with pytest.raises(WindowTooSmall):
        residue(om, WeightWindow.cube(2, 1, K_max=0))


# -- cohomology ---------------------------------------------------------------------

def test_cohomology_d2_pattern():
    dims = cohomology_ad(WeightWindow.cube(2, 3, 8, 5), 0, [0, 1])
    for (q, w), v in dims.items():
        if q == 0:
            assert v == int(min(w) >= 0)
        else:
            assert v == int(max(w) <= -1)
    assert dims[(0, (1, 0))] == 1 and dims[(0, (-1, 0))] == 0
    assert dims[(1, (-1, -1))] == 1 and dims[(1, (0, 0))] == 0


def test_cohomology_d3_spot_checks():
    win = WeightWindow([(-1, 1)] * 3, 8, 3)
    dims = cohomology_ad(win, 0, [0, 1, 2])
    assert dims[(0, (0, 0, 0))] == 1 and dims[(0, (1, 0, 1))] == 1
    assert dims[(2, (-1, -1, -1))] == 1
    assert all(v == 0 for (q, w), v in dims.items() if q == 1)


def test_unstable_window_reported():
    with pytest.raises(UnstableWindow):
        cohomology_ad(WeightWindow.cube(2, 2, 1, 0), 0, [0, 1])
