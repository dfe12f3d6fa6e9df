import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from higherkm.core import GradedSpaceWindow, SparseMatrix, ChainComplexWindow, cohomology_window
from higherkm.currents import (sl2, gl, abelian, lie_as_linf, theta_kN, killing_form, fhk_cocycle)
from higherkm.currents.sphere import SphereSampler
from higherkm.homological import (ce_complex, truncated_polynomial, ground_field, exterior_algebra,
                                  matrix_algebra, hochschild_b, hochschild_window, cyclic_quotient,
                                  CyclicCochain, check_cyclic_cocycle, theta_infinity, ad_ops,
                                  truncated_ops, lqt_pullback, GradedMap, Retraction, NotNilpotent,
                                  perturb_retraction, verify_perturbation, random_retraction,
                                  tensor_perturbation, hopf_small_model, coinvariant_dim)
from higherkm.homological.hochschild import ADTupleSampler, rotate
from higherkm.homological.hpl import complex_map

from oracles import bar_differential_truncated, coinvariants_dim


# -- Chevalley-Eilenberg -------------------------------------------------------------

def test_ce_abelian_has_no_differential():
    h = cohomology_window(ce_complex(lie_as_linf(abelian(2)), 3)).dims
    assert h == {0: 1, -1: 2, -2: 1}


def test_ce_sl2():
    h = cohomology_window(ce_complex(lie_as_linf(sl2()), 3)).dims
    assert h == {0: 1, -1: 0, -2: 0, -3: 1}


def test_ce_gl2_twisted_by_trace():
    cx = ce_complex(lie_as_linf(gl(2)), 4, cocycle=lambda i: 1 if i in (0, 3) else 0, cocycle_arity=1)
    assert cohomology_window(cx.at(0)).dims == {0: 1, -1: 1, -2: 0, -3: 1, -4: 1}
    assert all(v == 0 for v in cohomology_window(cx.at(2)).dims.values())


def test_ce_twist_of_wrong_degree():
    with pytest.raises(ValueError):
        ce_complex(lie_as_linf(gl(2)), 3, cocycle=lambda i, j: 1, cocycle_arity=2)


# -- Hochschild and cyclic -----------------------------------------------------------

@pytest.mark.parametrize("n", [2, 3])
def test_hochschild_matches_bar_oracle(n):
    cutoff = 4
    alg = truncated_polynomial(n)
    h = cohomology_window(hochschild_window(alg, cutoff))
    rank = {}
    for ar in range(2, cutoff + 1):
        _, _, mat = bar_differential_truncated(n, ar)
        rank[ar] = int(np.linalg.matrix_rank(np.array(mat, dtype=float)))
    for ar in range(1, cutoff):
        exp = n ** ar - rank.get(ar, 0) - rank[ar + 1]
        assert h.dims[-(ar - 1)] == exp


def test_hochschild_b_squares_to_zero():
    for alg in (truncated_polynomial(3), exterior_algebra(2), matrix_algebra(2)):
        for w in [(0, 1, 1), (1, 1, 0, 1), (1, 0, 1, 1)]:
            if max(w) >= alg.n:
                continue
            total = {}
            for k, c in hochschild_b(alg, w).items():
                for k2, c2 in hochschild_b(alg, k).items():
                    total[k2] = total.get(k2, 0) + c * c2
            assert not any(total.values())


def test_reduced_ground_field_is_acyclic():
    h = cohomology_window(hochschild_window(ground_field(), 4, reduced=True)).dims
    assert all(v == 0 for v in h.values())


def test_rotation_has_order_arity():
    alg = exterior_algebra(2)
    for w in [(1, 2), (0, 1, 2), (3, 1, 2, 1)]:
        sign, cur = 1, w
        for _ in range(len(w)):
            s, cur = rotate(alg, cur)
            sign *= s
        assert cur == w and sign == 1


def test_cyclic_ground_field():
    h = cohomology_window(cyclic_quotient(ground_field(), 5)).dims
    assert h == {0: 1, -1: 0, -2: 1, -3: 0, -4: 1}


def test_cyclic_cocycle_on_truncated():
    alg = truncated_polynomial(3)
    trace = CyclicCochain.from_values(alg, 1, {(0,): 1})
    assert check_cyclic_cocycle(trace, truncated_ops(alg), 30)[0]
    sym = CyclicCochain.from_values(alg, 2, {(0, 0): 1})      # symmetric, so not cyclic
    ok, fail = check_cyclic_cocycle(sym, truncated_ops(alg), 30)
    assert not ok and fail["check"] == "cyclic"
    zero = CyclicCochain.from_values(alg, 2, {})
    assert check_cyclic_cocycle(zero, truncated_ops(alg), 30)[0]


@pytest.mark.parametrize("d", [1, 2])
def test_theta_infinity_is_cyclic_cocycle(d):
    ok, fail = check_cyclic_cocycle(theta_infinity(d), ad_ops(d), 25, seed=d,
                                    tuple_sampler=ADTupleSampler(d))
    assert ok, fail


def test_missing_sign_is_rejected():
    # Θ_2^∞ with an extra (-1)^{|a_0|}, the sign a careless rotation would add
    t = theta_infinity(2)
    bad = CyclicCochain(3, lambda a, b, c: t(a, b, c) * (-1) ** a.degree(), t.degree)
    ok, fail = check_cyclic_cocycle(bad, ad_ops(2), 25, seed=3, tuple_sampler=ADTupleSampler(2))
    assert not ok


# -- LQT ---------------------------------------------------------------------------

@pytest.mark.parametrize("d,N", [(1, 1), (1, 2), (2, 2)])
def test_lqt_pullback_is_fhk(d, N):
    g = gl(N)
    f = lqt_pullback(theta_infinity(d), N)
    th = theta_kN(d + 1, N)
    rng = random.Random(7)
    sampler = SphereSampler(g, d)
    seen = 0
    for _ in range(60):
        xs = sampler.cocycle_tuple(rng)
        if xs is None:
            continue
        seen += 1
        assert f(*xs) == fhk_cocycle(th, xs)
    assert seen >= 50


def test_lqt_scaling():
    d, N = 1, 2
    f = lqt_pullback(theta_infinity(d), N)
    rng = random.Random(1)
    sampler = SphereSampler(gl(N), d)
    lam = Fraction(3)
    for _ in range(10):
        xs = sampler.cocycle_tuple(rng)
        if xs is None:
            continue
        ys = [x.scale(lam) for x in xs]
        assert f(*ys) == f(*xs) * lam ** (d + 1)


# -- homological perturbation ---------------------------------------------------------

def test_zero_perturbation_changes_nothing():
    rng = random.Random(0)
    r = random_retraction(rng, spoil=False)
    r = r.with_side_conditions()
    zero = GradedMap(r.big.spaces, r.big.spaces, 1)
    res = perturb_retraction(r, zero)
    assert res.iota.at(5) == r.iota and res.pi.at(5) == r.pi and res.eta.at(5) == r.eta
    assert res.d_small.at(5) == complex_map(r.small)
    assert all(verify_perturbation(r, zero, res).values())


@given(st.integers(0, 10 ** 6))
@settings(max_examples=20, deadline=None)
def test_random_perturbations(seed):
    rng = random.Random(seed)
    r = random_retraction(rng)
    big, delta = tensor_perturbation(r, rng)
    res = perturb_retraction(big, delta)
    assert all(verify_perturbation(big, delta, res).values())
    for K in (1, -2):
        assert cohomology_window(big.big.at(K)).dims == \
            cohomology_window(res.small_complex_at(big.small.spaces, K)).dims


def test_higher_orders_occur():
    orders = set()
    for seed in range(30):
        rng = random.Random(seed)
        big, delta = tensor_perturbation(random_retraction(rng), rng)
        orders.add(perturb_retraction(big, delta).nilpotency_order)
    assert max(orders) >= 2


def test_not_nilpotent():
    sp = {0: GradedSpaceWindow(["x"], 0), 1: GradedSpaceWindow(["y"], 1)}
    empty = {0: GradedSpaceWindow([], 0), 1: GradedSpaceWindow([], 1)}
    d = {0: SparseMatrix(sp[1], sp[0], columns={"x": {"y": 1}})}
    big = ChainComplexWindow(sp, d)
    small = ChainComplexWindow(empty, {})
    eta = GradedMap(sp, sp, -1, {1: SparseMatrix(sp[0], sp[1], columns={"y": {"x": -1}})})
    r = Retraction(big, small, GradedMap(empty, sp, 0), GradedMap(sp, empty, 0), eta)
    delta = GradedMap(sp, sp, 1, {0: SparseMatrix(sp[1], sp[0], columns={"x": {"y": 2}})})
    with pytest.raises(NotNilpotent):
        perturb_retraction(r, delta)


# -- Hopf small model ----------------------------------------------------------------

def _structure(g):
    return [[g.bracket_basis(i, j) for j in range(g.dim)] for i in range(g.dim)]


@pytest.mark.parametrize("g", [abelian(1), abelian(2), sl2()])
def test_hopf_degree_zero_is_coinvariants(g):
    res = hopf_small_model(g, 4)
    assert res.cross_check
    for s in range(5):
        assert res.dims[(0, s)] == coinvariants_dim(_structure(g), s) == coinvariant_dim(g, s)


def test_hopf_examples():
    assert hopf_small_model(sl2(), 4).degree0() == (1, 0, 1, 0, 1)
    assert hopf_small_model(gl(2), 3).degree0() == (1, 1, 2, 2)
    res = hopf_small_model(sl2(), 3, theta=killing_form(sl2()))
    assert res.twist_vanishes and res.dims == hopf_small_model(sl2(), 3).dims
