from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from higherkm.core import (Scalar, ZERO, ONE, TAU, format_scalar, parse_scalar, koszul_int,
                           koszul_sign, perm_sign, sort_sign, GradedSpaceWindow, SparseMatrix,
                           rank_kernel, ChainComplexWindow, cohomology_window, ComplexError)
from higherkm.core.linalg import rank, solve

from oracles import rank_by_minors

small = st.integers(-4, 4)
polys = st.lists(small, min_size=1, max_size=3)


@st.composite
def scalars(draw):
    num = draw(polys)
    den = draw(polys.filter(lambda p: any(p)))
    return Scalar(tuple(num), tuple(den))


# -- Scalar ------------------------------------------------------------------

@given(scalars(), scalars(), scalars())
@settings(max_examples=60, deadline=None)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == ZERO
    if a:
        assert a * a.inverse() == ONE


@given(scalars())
@settings(max_examples=80, deadline=None)
def test_format_parse_roundtrip(a):
    assert parse_scalar(format_scalar(a)) == a


def test_tau_powers():
    assert Scalar.tau_power(2) == TAU * TAU
    assert Scalar.tau_power(-1) * TAU == ONE
    assert Scalar.tau_power(-3, 2).tau_valuation() == -3
    assert format_scalar(Scalar.tau_power(-2, Fraction(3, 2))) == "3/2*tau^-2"
    assert Scalar(Fraction(1, 3)).to_fraction() == Fraction(1, 3)
    assert not (TAU + 1).is_rational()


def test_scalar_equality_with_rationals():
    assert Scalar(3) == 3
    assert Scalar(Fraction(1, 2)) == Fraction(1, 2)
    assert Scalar("1/(tau+1)") * (TAU + 1) == ONE


# -- signs -------------------------------------------------------------------

@given(st.lists(st.integers(0, 3), min_size=1, max_size=6), st.randoms())
@settings(max_examples=80, deadline=None)
def test_koszul_is_a_homomorphism(degs, rnd):
    n = len(degs)
    p = list(range(n))
    q = list(range(n))
    rnd.shuffle(p)
    rnd.shuffle(q)
    # rearranging by p and then by q is rearranging by p∘q
    pq = [p[q[i]] for i in range(n)]
    assert koszul_int(pq, degs) == koszul_int(p, degs) * koszul_int(q, [degs[i] for i in p])


def test_koszul_examples():
    assert koszul_int([1, 0], [1, 1]) == -1
    assert koszul_int([1, 0], [1, 2]) == 1
    assert koszul_sign([2, 1], [1, 1]) == -ONE
    assert perm_sign([1, 2, 0]) == 1
    assert sort_sign([2, 1], [1, 1]) == -1
    assert sort_sign([1, 1], [1, 1]) == 0
    assert sort_sign([1, 1], [0, 0]) == 1
    with pytest.raises(ValueError):
        koszul_int([0, 0], [1, 1])


def test_perm_sign_matches_parity_of_inversions():
    for p in permutations(range(4)):
        inv = sum(1 for i in range(4) for j in range(i + 1, 4) if p[i] > p[j])
        assert perm_sign(list(p)) == (-1) ** inv


# -- linear algebra ----------------------------------------------------------

def _matrix(rows):
    R = GradedSpaceWindow(["r%d" % i for i in range(len(rows))])
    C = GradedSpaceWindow(["c%d" % j for j in range(len(rows[0]))])
    ent = {("r%d" % i, "c%d" % j): Fraction(x) for i, r in enumerate(rows) for j, x in enumerate(r) if x}
    return SparseMatrix(R, C, entries=ent)


@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=1, max_size=4)))
@settings(max_examples=80, deadline=None)
def test_rank_matches_minor_oracle(rows):
    m = _matrix(rows)
    r, ker = rank_kernel(m)
    assert r == rank_by_minors(rows) == rank(m)
    assert len(ker) == len(rows[0]) - r
    for v in ker:
        assert not m.apply(v)


def test_solve_and_product():
    m = _matrix([[1, 2], [3, 4]])
    x = solve(m, {"r0": 1, "r1": 0})
    assert m.apply(x) == {"r0": 1}
    assert (m @ SparseMatrix(m.cols, m.cols, columns={c: {c: 1} for c in m.cols})) == m


def test_matrix_over_scalars():
    R = GradedSpaceWindow(["a", "b"])
    m = SparseMatrix(R, R, entries={("a", "a"): TAU, ("b", "a"): ONE, ("a", "b"): TAU * TAU,
                                    ("b", "b"): TAU})
    assert rank(m) == 1


# -- complexes ---------------------------------------------------------------

def _two_term(c):
    sp = {0: GradedSpaceWindow(["x"], 0), 1: GradedSpaceWindow(["y"], 1)}
    return ChainComplexWindow(sp, {0: SparseMatrix(sp[1], sp[0], entries={("y", "x"): c} if c else {})})


def test_cohomology_of_small_complexes():
    assert cohomology_window(_two_term(2)).dims == {0: 0, 1: 0}
    assert cohomology_window(_two_term(0)).dims == {0: 1, 1: 1}


def test_d_squared_rejected():
    sp = {0: GradedSpaceWindow(["x"], 0), 1: GradedSpaceWindow(["y"], 1), 2: GradedSpaceWindow(["z"], 2)}
    d = {0: SparseMatrix(sp[1], sp[0], entries={("y", "x"): 1}),
         1: SparseMatrix(sp[2], sp[1], entries={("z", "y"): 1})}
    with pytest.raises(ComplexError):
        ChainComplexWindow(sp, d)


def test_twisted_complex_needs_specialization():
    sp = {0: GradedSpaceWindow(["x"], 0), 1: GradedSpaceWindow(["y"], 1)}
    cx = ChainComplexWindow(sp, {}, {0: SparseMatrix(sp[1], sp[0], entries={("y", "x"): 1})})
    with pytest.raises(ComplexError):
        cohomology_window(cx)
    assert cohomology_window(cx.at(0)).dims == {0: 1, 1: 1}
    assert cohomology_window(cx.at(5)).dims == {0: 0, 1: 0}


def test_contaminated_edges():
    sp = {0: GradedSpaceWindow(["x"], 0), 1: GradedSpaceWindow(["y"], 1)}
    cx = ChainComplexWindow(sp, {}, complete_below=False, complete_above=False)
    assert set(cohomology_window(cx).contaminated) == {0, 1}
