import random
from fractions import Fraction

import numpy as np
import pytest

from chaincurv.algebra import (
    make_iFjj,
    AlgebraElement, G0, InnerProductForm, RankParametricError, bracket,
    combine, in_span, independent, inner, make_E, make_F, make_Fjj, make_iF,
    matrix_rank, nullspace, rref, solve_in_span, span_equal,
)
from chaincurv.scalars import ONE, SQRT2, ZERO, CScalar, Scalar, trig_pair


def so_basis(n):
    return [make_E(i, j, n) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def rand_element(rng, basis):
    return combine(basis, [Scalar(Fraction(rng.randint(-5, 5), rng.randint(1, 3)))
                           for _ in basis])


# -- generators ---------------------------------------------------------------

def test_make_E_entries():
    e = make_E(1, 2, 3)
    assert e.entry(0, 1) == CScalar(1)
    assert e.entry(1, 0) == CScalar(-1)
    assert sum(0 if e.entry(i, j).is_zero() else 1 for i in range(3) for j in range(3)) == 2


def test_make_E_antisymmetry_in_indices():
    assert make_E(2, 1, 3) == -make_E(1, 2, 3)


def test_make_Fjj_diagonal():
    f = make_Fjj(2, 3)
    expected = [[0, 0, 0], [0, 1, 0], [0, 0, 0]]
    for i in range(3):
        for j in range(3):
            assert f.entry(i, j) == CScalar(expected[i][j])


def test_generator_index_errors():
    with pytest.raises(IndexError):
        make_E(0, 2, 3)
    with pytest.raises(IndexError):
        make_E(1, 1, 3)
    with pytest.raises(IndexError):
        make_F(1, 4, 3)


# -- bracket -------------------------------------------------------------------

def test_bracket_E12_E23_is_E13():
    assert bracket(make_E(1, 2, 3), make_E(2, 3, 3)) == make_E(1, 3, 3)


def test_bracket_alternating():
    x = combine(so_basis(4), [Scalar(1), Scalar(2), SQRT2, ZERO, Scalar(-1), Scalar(3)])
    assert bracket(x, x).is_zero()


def test_bracket_against_numpy_oracle():
    rng = random.Random(42)
    basis = so_basis(5)
    for _ in range(25):
        a, b = rand_element(rng, basis), rand_element(rng, basis)
        exact = bracket(a, b).to_numpy()
        an, bn = a.to_numpy(), b.to_numpy()
        assert np.allclose(exact, an @ bn - bn @ an, atol=1e-9)


def test_bracket_dimension_mismatch():
    with pytest.raises(ValueError):
        bracket(make_E(1, 2, 3), make_E(1, 2, 4))


def test_bracket_of_anti_hermitian_is_anti_hermitian():
    rng = random.Random(3)
    u_basis = [make_E(1, 2, 3), make_iF(1, 2, 3), make_iFjj(1, 3) - make_iFjj(2, 3)]
    for _ in range(10):
        a, b = rand_element(rng, u_basis), rand_element(rng, u_basis)
        assert a.is_anti_hermitian() and b.is_anti_hermitian()
        assert bracket(a, b).is_anti_hermitian()


# -- inner product ----------------------------------------------------------------

def test_inner_E12_with_itself():
    # trace(E12^2) = -2 by direct expansion
    assert inner(make_E(1, 2, 5), make_E(1, 2, 5)) == Scalar(2)


def test_inner_disjoint_support():
    assert inner(make_E(1, 2, 5), make_E(1, 3, 5)) == ZERO


def test_inner_scale_and_positivity():
    form = InnerProductForm(Fraction(7, 3))
    assert inner(make_E(1, 2, 5), make_E(1, 2, 5), form) == Scalar(Fraction(14, 3))
    with pytest.raises(ValueError):
        InnerProductForm(0)


def test_ad_invariance_random_so5():
    rng = random.Random(11)
    basis = so_basis(5)
    for _ in range(50):
        x, y, z = (rand_element(rng, basis) for _ in range(3))
        lhs = inner(bracket(x, y), z) + inner(y, bracket(x, z))
        assert lhs == ZERO


# -- rank ----------------------------------------------------------------------

def test_rank_examples():
    assert matrix_rank(make_E(1, 2, 5)) == 2
    assert matrix_rank(AlgebraElement.zero(5)) == 0
    assert matrix_rank(make_E(1, 2, 5) + make_E(3, 4, 5)) == 4


def test_rank_matches_numpy_oracle():
    rng = random.Random(5)
    basis = so_basis(5)
    for _ in range(20):
        a = rand_element(rng, basis)
        assert matrix_rank(a) == np.linalg.matrix_rank(a.to_numpy(), tol=1e-9)


def test_rank_rejects_parametric():
    c, s = trig_pair("theta")
    m = make_E(1, 2, 4).scale(CScalar(c)) + make_E(3, 4, 4).scale(CScalar(s))
    with pytest.raises(RankParametricError):
        matrix_rank(m)


# -- field linear algebra ----------------------------------------------------------

def test_solve_in_span_and_membership():
    basis = [make_E(1, 2, 4) + make_E(3, 4, 4), make_E(1, 3, 4) - make_E(2, 4, 4)]
    target = combine(basis, [SQRT2, Scalar(Fraction(-3, 2))])
    sol = solve_in_span(basis, target)
    assert sol == [SQRT2, Scalar(Fraction(-3, 2))]
    assert in_span(basis, target)
    assert not in_span(basis, make_E(1, 4, 4))


def test_independence_and_span_equal():
    b1 = [make_E(1, 2, 4), make_E(3, 4, 4)]
    b2 = [make_E(1, 2, 4) + make_E(3, 4, 4), make_E(1, 2, 4) - make_E(3, 4, 4)]
    assert independent(b1) and independent(b2)
    assert span_equal(b1, b2)
    assert not independent(b1 + [b1[0] + b1[1]])


def test_nullspace_exact():
    rows = [[ONE, SQRT2, ZERO], [ZERO, ZERO, ONE]]
    ns = nullspace(rows)
    assert len(ns) == 1
    v = ns[0]
    assert v[0] + SQRT2 * v[1] == ZERO and v[2] == ZERO


def test_rref_idempotent_pivots():
    rows = [[ONE, ONE, ZERO], [ONE, ONE, ONE]]
    red, piv = rref(rows)
    assert piv == [0, 2]
    assert red[0][1] == ONE
