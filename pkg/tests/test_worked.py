import oracles
from drazinkit.antitri import assemble
from drazinkit.exactmat import Matrix
from drazinkit.polyring import Polynomial
from drazinkit.worked import (COMPUTE, PSI_A, PSI_B, BC_ZERO_I3, CN_A, CN_AMINUS, EXPECTED, reproduce,
                              special_sum_identity_report)


def test_all_examples_reproduce():
    ok, lines = reproduce()
    assert ok
    assert lines[-1] == "6/6 examples reproduced"
    assert sum(line.startswith("[ok]") for line in lines) == 6


def test_output_is_byte_identical_across_runs():
    assert reproduce() == reproduce()


def test_every_example_has_a_computation():
    assert set(EXPECTED) == set(COMPUTE)


def test_tampered_polynomial_is_caught():
    table = {k: dict(v) for k, v in EXPECTED.items()}
    table["psi of AB, BA, AC, CA"]["psi_AB"] = Polynomial.from_roots(0, 0)
    ok, lines = reproduce(table)
    assert not ok
    assert "[MISMATCH] psi of AB, BA, AC, CA" in lines
    assert lines[-1] == "5/6 examples reproduced"


def test_tampered_index_is_caught():
    table = {k: dict(v) for k, v in EXPECTED.items()}
    table["BC = 0, i(A) = 1, i(M) = 3"]["i(M)"] = 2
    ok, _ = reproduce(table)
    assert not ok


def test_example_one_against_the_oracle():
    M = assemble(BC_ZERO_I3)
    want = EXPECTED["BC = 0, i(A) = 2, i(M) = 3"]
    assert oracles.drazin(M) == want["M^D"]
    assert oracles.index(M) == want["i(M)"]
    assert oracles.drazin(BC_ZERO_I3.A) == want["A^D"]


def test_psi_examples_against_the_oracle():
    assert oracles.min_poly(PSI_A @ PSI_B) == Polynomial.from_roots(0, 0, 0)
    assert oracles.min_poly(CN_A) == Polynomial.from_roots(-2, -2, 0, 0, 0)
    S = CN_A @ CN_A @ CN_AMINUS + Matrix.identity(5) - CN_A @ CN_AMINUS
    assert oracles.min_poly(S) == Polynomial.from_roots(1, 0, 0, -2, -2)


def test_displayed_one_inverse_is_a_one_inverse():
    assert CN_A @ CN_AMINUS @ CN_A == CN_A


def test_identities_hold_on_the_index_three_example():
    assert all(special_sum_identity_report().values())
