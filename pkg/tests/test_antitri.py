import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from drazinkit import gen
from drazinkit.antitri import (CASES, AntiTriangularBlocks, Branch, assemble, check_group_invertible,
                               check_index_two, classify_and_solve, criteria_branch, drazin_a_nonsingular_bc_zero,
                               drazin_a_zero, drazin_bc_zero, drazin_oneside_case, drazin_orthogonal_case,
                               gamma_omega, group_bc_nonsingular, index_b_identity, oneside_G_blocks,
                               select_case, y_drazin_power, y_matrix, y_matrix_drazin, y_power)
from drazinkit.errors import DimensionMismatch, HypothesisViolated, VerificationFailed
from drazinkit.exactmat import Matrix, inverse, is_nonsingular, mat_pow
from drazinkit.geninv import drazin_index, one_inverse
from drazinkit.worked import BC_ZERO_I3, BC_ZERO_LOWER, BC_ZERO_UPPER, EXPECTED

seeds = st.integers(0, 2 ** 32 - 1)


def J(n):
    return Matrix([[1 if j == i + 1 else 0 for j in range(n)] for i in range(n)])


def M_index(blk):
    return oracles.index(assemble(blk))


# -- blocks ----------------------------------------------------------------------------


def test_assemble_example_shape():
    M = assemble(BC_ZERO_I3)
    assert M.shape == (9, 9)
    assert M.submatrix(3, 9, 3, 9).is_zero()


def test_non_conformal_blocks_rejected():
    with pytest.raises(DimensionMismatch):
        AntiTriangularBlocks(Matrix.zeros(2), Matrix.zeros(3, 1), Matrix.zeros(1, 2))
    with pytest.raises(DimensionMismatch):
        AntiTriangularBlocks(Matrix.zeros(2, 3), Matrix.zeros(2, 1), Matrix.zeros(1, 2))


@settings(max_examples=30)
@given(seeds)
def test_gamma_and_omega(seed):
    blk = gen.rand_blocks(random.Random(seed))
    Gamma, Omega = gamma_omega(blk)
    # Ω is Γ's special sum, so its index drops by one when Γ is singular
    ig = oracles.index(Gamma)
    assert oracles.index(Omega) == max(ig - 1, 0)


# -- criteria ---------------------------------------------------------------------------


def test_group_criterion_equivalence_on_samples():
    rng = random.Random(21)
    for _ in range(150):
        blk = gen.rand_blocks_singular(rng)
        assert check_group_invertible(blk) == (M_index(blk) <= 1)


def test_group_criterion_independent_of_one_inverses():
    rng = random.Random(22)
    for _ in range(60):
        blk = gen.rand_blocks_singular(rng)
        verdict = check_group_invertible(blk)
        Bm = gen.rand_one_inverses(rng, blk.B, 1)[0]
        Cm = gen.rand_one_inverses(rng, blk.C, 1)[0]
        assert check_group_invertible(blk, Bm=Bm, Cm=Cm) == verdict


def test_criteria_need_singular_a_and_bc():
    blk = AntiTriangularBlocks(Matrix.identity(1), Matrix.zeros(1), Matrix.zeros(1))
    with pytest.raises(HypothesisViolated):
        check_group_invertible(blk)
    with pytest.raises(HypothesisViolated):
        check_index_two(blk)


def test_index_two_criterion_implies_index_two():
    rng = random.Random(23)
    fired = 0
    for _ in range(200):
        blk = gen.rand_blocks_singular(rng)
        Gamma, _ = gamma_omega(blk)
        crit = check_index_two(blk)
        assert crit == (oracles.index(Gamma) <= 1)
        if crit and not check_group_invertible(blk):
            fired += 1
            assert M_index(blk) == 2
    assert fired > 0


def test_index_two_converse_counterexample():
    # M = [[0, 0], [1, 0]] has index two while W - A(I - W^-W) = 0 is singular
    blk = AntiTriangularBlocks(Matrix([[0]]), Matrix([[0]]), Matrix([[1]]))
    assert M_index(blk) == 2
    assert not check_group_invertible(blk)
    assert not check_index_two(blk)


# -- closed forms -----------------------------------------------------------------------


def test_orthogonal_case_random():
    rng = random.Random(31)
    for _ in range(100):
        blk = gen.rand_blocks_orthogonal(rng)
        rep = drazin_orthogonal_case(blk)
        assert rep.ok, rep.checks
        assert rep.drazin == oracles.drazin(assemble(blk))
        assert rep.lower_bound <= rep.index <= rep.upper_bound


def test_orthogonal_case_rejects_one_sided():
    blk = AntiTriangularBlocks(Matrix([[0, 0], [1, 0]]), Matrix([[0], [1]]), Matrix([[0, 1]]))
    assert (blk.A @ blk.W).is_zero() and not (blk.W @ blk.A).is_zero()
    with pytest.raises(HypothesisViolated):
        drazin_orthogonal_case(blk)
    assert drazin_oneside_case(blk).drazin == oracles.drazin(assemble(blk))


def test_oneside_case_random():
    rng = random.Random(32)
    for _ in range(100):
        blk = gen.rand_blocks_oneside(rng)
        rep = drazin_oneside_case(blk)
        assert rep.drazin == oracles.drazin(assemble(blk))
        assert rep.ok, rep.checks


def test_oneside_literal_g_blocks_differ_somewhere():
    rng = random.Random(33)
    differs = 0
    for _ in range(100):
        blk = gen.rand_blocks_oneside(rng)
        Gamma, _ = gamma_omega(blk)
        GD = oracles.drazin(Gamma)
        assert oneside_G_blocks(blk) == GD
        differs += oneside_G_blocks(blk, literal=True) != GD
    assert differs > 0


def test_oneside_truncation_is_immaterial():
    rng = random.Random(34)
    for _ in range(40):
        blk = gen.rand_blocks_oneside(rng)
        k = max(drazin_index(blk.A), 2 * drazin_index(blk.W) - 1)
        assert oneside_G_blocks(blk, k=k) == oneside_G_blocks(blk)


def test_bc_zero_worked_examples():
    rep = drazin_bc_zero(BC_ZERO_I3)
    want = EXPECTED["BC = 0, i(A) = 2, i(M) = 3"]
    assert rep.index == 3 and rep.drazin == want["M^D"]
    for blk, ia in ((BC_ZERO_I3, 2), (BC_ZERO_LOWER, 3), (BC_ZERO_UPPER, 1)):
        rep = drazin_bc_zero(blk)
        assert drazin_index(blk.A) == ia and rep.index == 3
        assert (rep.lower_bound, rep.upper_bound) == (ia, ia + 2)


def test_bc_zero_random():
    rng = random.Random(35)
    for _ in range(100):
        blk = gen.rand_blocks_bc_zero(rng)
        rep = drazin_bc_zero(blk)
        assert rep.drazin == oracles.drazin(assemble(blk))
        assert rep.ok


def test_a_zero_cases():
    blk = AntiTriangularBlocks(Matrix.zeros(2), J(2), J(2))
    rep = drazin_a_zero(blk)
    assert rep.index == 2 and rep.drazin.is_zero()
    rng = random.Random(36)
    for _ in range(100):
        blk = gen.rand_blocks_a_zero(rng)
        rep = drazin_a_zero(blk)
        assert rep.ok, rep.checks
        assert rep.drazin == oracles.drazin(assemble(blk))
    with pytest.raises(HypothesisViolated):
        drazin_a_zero(BC_ZERO_I3)


def test_bc_nonsingular():
    blk = AntiTriangularBlocks(Matrix([[3]]), Matrix([[2]]), Matrix([[5]]))
    rep = group_bc_nonsingular(blk)
    assert rep.branch is Branch.INVERTIBLE and rep.index == 0
    assert rep.drazin == inverse(assemble(blk))
    rng = random.Random(37)
    for _ in range(100):
        blk = gen.rand_blocks_bc_nonsingular(rng)
        rep = group_bc_nonsingular(blk)
        both = is_nonsingular(blk.B) and is_nonsingular(blk.C)
        assert rep.index == (0 if both else 1) == M_index(blk)
        assert rep.drazin == oracles.drazin(assemble(blk))


def test_a_nonsingular_bc_zero():
    rng = random.Random(38)
    for _ in range(100):
        blk = gen.rand_blocks_bc_zero(rng, a_singular=False)
        rep = drazin_a_nonsingular_bc_zero(blk)
        assert rep.index in (1, 2) and rep.index == M_index(blk)
        assert rep.drazin == oracles.drazin(assemble(blk))
    with pytest.raises(HypothesisViolated):
        drazin_a_nonsingular_bc_zero(BC_ZERO_I3)


def test_b_identity_examples():
    rep = index_b_identity(Matrix.zeros(2), J(2))
    assert rep.index == 4 == M_index(AntiTriangularBlocks(Matrix.zeros(2), Matrix.identity(2), J(2)))
    assert index_b_identity(Matrix([[1]]), Matrix([[2]])).index == 0
    E = Matrix([[1, 1], [0, 0]])
    rep = index_b_identity(Matrix.block_diag(J(2), Matrix.zeros(2)), Matrix.block_diag(Matrix.zeros(2), E))
    assert rep.branch is Branch.ORTHOGONAL and rep.index == 3
    with pytest.raises(DimensionMismatch):
        index_b_identity(Matrix.zeros(2), Matrix.zeros(3))


@pytest.mark.parametrize("orth", [None, "both", "left"])
def test_b_identity_random(orth):
    rng = random.Random(39)
    for _ in range(60):
        A, C = gen.rand_blocks_b_identity(rng, orth)
        rep = index_b_identity(A, C)
        assert rep.index == M_index(AntiTriangularBlocks(A, Matrix.identity(A.rows), C))
        assert rep.lower_bound <= rep.index <= rep.upper_bound


# -- the Y matrix ----------------------------------------------------------------------


@settings(max_examples=40)
@given(seeds)
def test_y_matrix_drazin(seed):
    W = gen.rand_singular(random.Random(seed))
    res = y_matrix_drazin(W)
    assert res.direct_agrees
    assert res.inverse == oracles.drazin(res.Y)
    assert oracles.index(res.Y) == 2 * oracles.index(W) - 1


def test_y_matrix_needs_singular_w():
    with pytest.raises(HypothesisViolated):
        y_matrix_drazin(Matrix.identity(2))


@settings(max_examples=40)
@given(seeds, st.integers(1, 7))
def test_y_powers(seed, n):
    rng = random.Random(seed)
    W = gen.rand_singular(rng)
    Wm = gen.rand_one_inverses(rng, W, 1)[0]
    Y = y_matrix(W, Wm)
    assert y_power(W, n, Wm) == mat_pow(Y, n)
    YD = y_matrix_drazin(W, Wm).inverse
    assert y_drazin_power(W, n, Wm) == mat_pow(YD, n)


def test_y_drazin_power_literal_odd_form_fails():
    W = Matrix([[2, 0], [0, 0]])
    Wm = one_inverse(W)
    YD = y_matrix_drazin(W, Wm).inverse
    assert y_drazin_power(W, 3, Wm) == mat_pow(YD, 3)
    assert y_drazin_power(W, 3, Wm, literal=True) != mat_pow(YD, 3)


# -- dispatch ---------------------------------------------------------------------------


def test_select_case_examples():
    assert select_case(BC_ZERO_I3) is Branch.BC_ZERO
    assert select_case(AntiTriangularBlocks(Matrix.zeros(2), Matrix.diag([1, 0]), J(2))) is Branch.A_ZERO
    assert select_case(AntiTriangularBlocks(Matrix([[1]]), Matrix([[1]]), Matrix([[1]]))) is Branch.BC_NONSINGULAR


def test_classify_example_one():
    rep = classify_and_solve(BC_ZERO_I3)
    assert rep.branch is Branch.BC_ZERO and rep.index == 3
    assert rep.drazin == EXPECTED["BC = 0, i(A) = 2, i(M) = 3"]["M^D"]


def test_forced_branch_errors():
    with pytest.raises(ValueError):
        classify_and_solve(BC_ZERO_I3, "nonsense")
    with pytest.raises(HypothesisViolated):
        classify_and_solve(BC_ZERO_I3, "a-zero")
    with pytest.raises(HypothesisViolated):
        classify_and_solve(BC_ZERO_I3, "b-identity")


def test_every_case_name_maps_to_a_branch():
    assert set(CASES.values()) <= set(Branch)


@settings(max_examples=80)
@given(seeds)
def test_classify_random_matches_direct(seed):
    blk = gen.rand_blocks(random.Random(seed))
    rep = classify_and_solve(blk)
    assert rep.index == M_index(blk)
    assert rep.drazin == oracles.drazin(assemble(blk))
    assert rep.lower_bound <= rep.index <= rep.upper_bound


def test_criteria_branch_agrees_with_generic():
    rng = random.Random(40)
    for _ in range(60):
        blk = gen.rand_blocks_singular(rng)
        over = criteria_branch(blk)
        rep = classify_and_solve(blk, "generic")
        if over:
            assert rep.branch is over[0]


def test_verification_failure_is_reported():
    assert issubclass(VerificationFailed, AssertionError)
