import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from strategies import conformal_pair, matrices, singular_square, square
from drazinkit import gen
from drazinkit.antitri import assemble
from drazinkit.errors import DimensionMismatch, IndexTooLarge, NotAOneInverse, OrthogonalityViolated
from drazinkit.exactmat import Matrix, inverse, mat_pow, rank
from drazinkit.geninv import (additive_drazin_oneside, additive_drazin_orthogonal, cline_drazin,
                              core_nilpotent, drazin, drazin_equations, drazin_index, drazin_via_special_sum,
                              group_inverse, is_drazin_inverse, is_one_inverse, one_inverse,
                              one_inverse_family, rank_sequence, special_sum)
from drazinkit.polyring import LAMBDA, Polynomial, min_poly, poly_lcm
from drazinkit.worked import PSI_A, PSI_B, CN_A, CN_AMINUS, BC_ZERO_I3


def J(n):
    return Matrix([[1 if j == i + 1 else 0 for j in range(n)] for i in range(n)])


AD_EX1 = Matrix([[2, 0, 0], [-8, 0, 0], [-6, 0, 0]])
E = Matrix([[1, 1], [0, 0]])


def rng_singulars(seed, count):
    rng = random.Random(seed)
    return [gen.rand_singular(rng) for _ in range(count)], rng


# -- index ------------------------------------------------------------------------------


def test_index_examples():
    assert drazin_index(Matrix([[2, 1], [1, 1]])) == 0
    assert drazin_index(J(3)) == 3
    assert drazin_index(assemble(BC_ZERO_I3)) == 3
    assert drazin_index(Matrix.zeros(0, 0)) == 0


def test_rank_sequence():
    assert rank_sequence(J(3), 4) == [3, 2, 1, 0, 0]


def test_index_needs_square():
    with pytest.raises(DimensionMismatch):
        drazin_index(Matrix.zeros(2, 3))


@given(square(max_dim=6))
def test_index_matches_oracle(A):
    assert drazin_index(A) == oracles.index(A)


# -- {1}-inverses -------------------------------------------------------------------


def test_one_inverse_examples():
    A = Matrix([[2, 1], [1, 1]])
    assert one_inverse(A) == inverse(A)
    assert one_inverse(Matrix.zeros(2, 3)) == Matrix.zeros(3, 2)
    R1 = Matrix([[1, 2], [2, 4]])
    assert is_one_inverse(R1, one_inverse(R1))


@given(matrices(max_dim=5))
def test_one_inverse_property(A):
    X = one_inverse(A)
    assert X.shape == (A.cols, A.rows)
    assert A @ X @ A == A


def test_family_examples():
    A = Matrix([[1, 2], [2, 4]])
    Am = one_inverse(A)
    assert one_inverse_family(A, Am, Matrix.zeros(2)) == Am
    assert is_one_inverse(A, one_inverse_family(A, Am, Am))


def test_family_rejects_bad_inputs():
    A = Matrix([[1, 2], [2, 4]])
    with pytest.raises(NotAOneInverse):
        one_inverse_family(A, Matrix.zeros(2), Matrix.zeros(2))
    with pytest.raises(DimensionMismatch):
        one_inverse_family(A, one_inverse(A), Matrix.zeros(2, 3))


def test_family_random_z():
    rng = random.Random(11)
    for _ in range(200):
        A = gen.rand_singular(rng)
        Z = gen.rand_matrix(rng, A.cols, A.rows)
        assert is_one_inverse(A, one_inverse_family(A, one_inverse(A), Z))


@given(st.data())
def test_family_covers_any_one_inverse(data):
    # for any X in A{1}, Z = X reproduces X from any seed
    A = data.draw(singular_square(max_dim=4))
    X = one_inverse_family(A, one_inverse(A), data.draw(matrices(rows=A.cols, cols=A.rows)))
    assert one_inverse_family(A, one_inverse(A), X) == X


# -- core-nilpotent --------------------------------------------------------------------


def test_core_nilpotent_invertible_and_nilpotent():
    A = Matrix([[2, 1], [1, 1]])
    cn = core_nilpotent(A)
    assert cn.r == 2 and cn.nil.shape == (0, 0)
    assert cn.core == inverse(cn.U) @ A @ cn.U
    cn = core_nilpotent(J(3))
    assert cn.r == 0 and cn.k == 3 and min_poly(cn.nil) == LAMBDA ** 3


def test_core_nilpotent_example():
    cn = core_nilpotent(CN_A)
    assert min_poly(cn.core) == Polynomial.from_roots(-2, -2)
    assert mat_pow(cn.nil, 3).is_zero() and not mat_pow(cn.nil, 2).is_zero()
    assert cn.reconstruct() == CN_A


@given(square(max_dim=6))
def test_core_nilpotent_property(A):
    cn = core_nilpotent(A)
    assert cn.reconstruct() == A
    assert cn.r == rank(mat_pow(A, cn.k))
    if cn.k >= 1:
        assert mat_pow(cn.nil, cn.k).is_zero() and not mat_pow(cn.nil, cn.k - 1).is_zero()
    assert rank(cn.core) == cn.r


# -- Drazin and group inverses ----------------------------------------------------------


def test_drazin_examples():
    A = Matrix([[2, 1], [1, 1]])
    assert drazin(A).inverse == inverse(A) and drazin(A).index == 0
    res = drazin(J(4))
    assert res.inverse.is_zero() and res.index == 4
    assert drazin(BC_ZERO_I3.A).inverse == AD_EX1


@given(square(max_dim=6))
def test_drazin_matches_oracle(A):
    res = drazin(A)
    assert res.inverse == oracles.drazin(A)
    assert oracles.is_drazin(A, res.inverse)
    assert all(drazin_equations(A, res.inverse).values())


def test_drazin_equations_reject_wrong_candidate():
    A = J(2)
    assert not is_drazin_inverse(A, J(2).T)
    assert is_drazin_inverse(A, Matrix.zeros(2))


def test_group_inverse():
    assert group_inverse(E) == E
    A = Matrix([[2, 1], [1, 1]])
    assert group_inverse(A) == inverse(A)
    with pytest.raises(IndexTooLarge):
        group_inverse(J(2))


# -- Cline -------------------------------------------------------------------------------


def test_cline_examples():
    A = Matrix([[1, 1, 0], [0, 1, 0], [0, 0, 0]])
    assert cline_drazin(A, Matrix.identity(3)).inverse == drazin(A).inverse
    res = cline_drazin(PSI_A, PSI_B)
    assert (res.index_ab, res.index_ba) == (3, 2)
    assert res.inverse == drazin(PSI_A @ PSI_B).inverse


@given(conformal_pair())
def test_cline_property(pair):
    A, B = pair
    res = cline_drazin(A, B)
    assert res.inverse == oracles.drazin(A @ B)
    assert res.index_gap <= 1


def test_cline_shape_mismatch():
    with pytest.raises(DimensionMismatch):
        cline_drazin(Matrix.zeros(2, 3), Matrix.zeros(2, 3))


# -- special sum -------------------------------------------------------------------------


def test_special_sum_examples():
    A = Matrix([[2, 1], [1, 1]])
    assert special_sum(A, inverse(A)) == A
    S = special_sum(CN_A, CN_AMINUS)
    assert min_poly(S) == Polynomial.from_roots(1, 0, 0, -2, -2)
    with pytest.raises(NotAOneInverse):
        special_sum(J(2), Matrix.zeros(2))


def test_drazin_via_special_sum_examples():
    assert drazin_via_special_sum(J(3), one_inverse(J(3))).is_zero()
    assert drazin_via_special_sum(BC_ZERO_I3.A, one_inverse(BC_ZERO_I3.A)) == AD_EX1


def test_special_sum_invariants_on_samples():
    As, rng = rng_singulars(5, 120)
    for A in As:
        I = Matrix.identity(A.rows)
        k = drazin_index(A)
        expected_d = oracles.drazin(A)
        indices = set()
        for Am in gen.rand_one_inverses(rng, A, 5):
            assert drazin_via_special_sum(A, Am) == expected_d
            S = special_sum(A, Am)
            quad = {drazin_index(S), drazin_index(A + I - A @ Am),
                    drazin_index(Am @ A @ A + I - Am @ A), drazin_index(A + I - Am @ A)}
            assert quad == {k - 1}
            indices.add(drazin_index(S))
            for ell in range(1, 7):
                assert mat_pow(A @ A @ Am, ell) == mat_pow(A, ell + 1) @ Am
        assert len(indices) == 1


def test_min_poly_identities_for_index_at_least_two():
    rng = random.Random(8)
    seen = 0
    while seen < 80:
        A = gen.rand_singular(rng)
        if drazin_index(A) < 2:
            continue
        seen += 1
        psi = min_poly(A)
        for Am in gen.rand_one_inverses(rng, A, 3):
            assert psi == LAMBDA * min_poly(A @ A @ Am)
            assert min_poly(special_sum(A, Am)) == poly_lcm(psi // LAMBDA, Polynomial([-1, 1]))


def test_min_poly_identity_counterexample_at_index_one():
    # i(A) = 1: A^2A^- keeps index 1, so psi_(A^2A^-) already carries the lambda factor
    A = Matrix([[1, 0], [0, 0]])
    Am = one_inverse(A)
    assert drazin_index(A) == 1
    assert min_poly(A) != LAMBDA * min_poly(A @ A @ Am)
    assert oracles.min_poly(A) != LAMBDA * oracles.min_poly(A @ A @ Am)
    # same root cause for the index equality of the special sum and A^2A^-
    assert oracles.index(special_sum(A, Am)) == 0 != oracles.index(A @ A @ Am)
    assert min_poly(A @ A @ Am) == poly_lcm(min_poly(A) // LAMBDA, LAMBDA)
    assert min_poly(special_sum(A, Am)) == poly_lcm(min_poly(A) // LAMBDA, Polynomial([-1, 1]))


# -- additive formulas ---------------------------------------------------------------


def test_orthogonal_examples():
    X = Matrix([[1, 1, 0], [0, 0, 0], [0, 0, 0]])
    assert additive_drazin_orthogonal(X, Matrix.zeros(3)).inverse == drazin(X).inverse
    X = Matrix.block_diag(J(2), Matrix.zeros(2))
    Y = Matrix.block_diag(Matrix.zeros(2), E)
    res = additive_drazin_orthogonal(X, Y)
    assert res.index == 2
    assert res.inverse == drazin(X).inverse + drazin(Y).inverse == drazin(X + Y).inverse


def test_orthogonal_rejects():
    with pytest.raises(OrthogonalityViolated):
        additive_drazin_orthogonal(J(2), J(2).T)
    X = Matrix([[0, 1], [0, 0]])
    Y = Matrix([[0, 0], [0, 1]])
    with pytest.raises(OrthogonalityViolated):
        additive_drazin_orthogonal(X, Y)


def test_oneside_examples():
    X = Matrix([[0, 1], [0, 0]])
    Y = Matrix([[0, 0], [0, 1]])
    # the product that vanishes here is Y X; the formula is stated for XY = 0
    assert (Y @ X).is_zero() and not (X @ Y).is_zero()
    assert additive_drazin_oneside(Y, X) == oracles.drazin(X + Y)
    with pytest.raises(OrthogonalityViolated):
        additive_drazin_oneside(X, Y)
    Xo = Matrix.block_diag(J(2), Matrix.zeros(2))
    Yo = Matrix.block_diag(Matrix.zeros(2), E)
    assert additive_drazin_oneside(Xo, Yo) == additive_drazin_orthogonal(Xo, Yo).inverse


def test_oneside_random_and_truncation():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(2, 5)
        V, Vinv = gen.unimodular(rng, n)
        r = rng.randint(1, n - 1)
        R = gen.rand_matrix(rng, n, r)
        S = gen.rand_matrix(rng, n - r, n)
        X = V @ Matrix.block([[R, Matrix.zeros(n, n - r)]]) @ Vinv
        Y = V @ Matrix.block([[Matrix.zeros(r, n)], [S]]) @ Vinv
        assert (X @ Y).is_zero()
        D = oracles.drazin(X + Y)
        assert additive_drazin_oneside(X, Y) == D
        kmax = max(drazin_index(X), drazin_index(Y))
        assert additive_drazin_oneside(X, Y, k=kmax) == D


@settings(max_examples=25)
@given(st.integers(0, 2 ** 32 - 1))
def test_cross_check_random_squares(seed):
    A = gen.rand_square(random.Random(seed))
    assert drazin(A).inverse == oracles.drazin(A)
