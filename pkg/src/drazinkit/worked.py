"""Six worked rational examples with their expected values embedded.

``reproduce()`` recomputes every quantity from the input matrices and
compares it with the frozen value by exact equality.  Output is a list of
lines that depends only on the inputs and the expected table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from .antitri import AntiTriangularBlocks, assemble
from .exactmat import Matrix, format_matrix
from .geninv import drazin, drazin_index
from .polyring import Polynomial, format_factored, min_poly, poly_lcm, LAMBDA


def _m(rows) -> Matrix:
    return Matrix(rows)


def _J(n: int) -> Matrix:
    return Matrix([[1 if j == i + 1 else 0 for j in range(n)] for i in range(n)])


# -- inputs ---------------------------------------------------------------------------

PSI_A = _m([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]])
PSI_B = _m([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0], [0, 0, 0, 1]])
PSI_C = _m([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0], [0, 0, 0, 0]])

SHIFT_A = _m([[0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 0, 0],
             [0, 0, 0, -1, 0], [0, 0, 0, -2, 2]])
SHIFT_B = _m([[0, 1, 0, 0, 0], [0, 0, 0, 0, 0], [0, 0, 0, 0, 0],
             [0, 0, -1, -1, 0], [0, 0, 0, 0, -3]])

CN_CORE = _m([[-2, 1], [0, -2]])
CN_A = Matrix.block_diag(CN_CORE, _J(3))
CN_AMINUS = Matrix.block_diag(_m([["-1/2", "-1/4"], [0, "-1/2"]]), _J(3).T)

BC_ZERO_I3 = AntiTriangularBlocks(
    _m([["1/2", 0, 0], [0, 2, -2], ["1/2", 2, -2]]),
    _m([[1, "-1/2", -2, "-1/2", -1, "1/2"],
        [0, -1, 1, 0, 0, -1],
        [1, "-3/2", -1, "-1/2", -1, "-1/2"]]),
    _m([[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, 0], [1, -1, "-3/2"], [0, -1, 1]]))

BC_ZERO_LOWER = AntiTriangularBlocks(
    _J(3),
    _m([[3, 0, 0, 0, 0], [1, 0, 0, 0, 0], [0, 0, 0, 0, 0]]),
    _m([[0, 0, 0], [0, 1, 4], [0, 0, 0], [0, 0, 0], [0, 0, 0]]))

BC_ZERO_UPPER = AntiTriangularBlocks(
    _m([[1, -1, 1], [1, 2, 0], [2, 1, 1]]),
    _m([[-1, 0, -1, "-1/2"], [0, 0, 0, 0], [0, 0, 0, 0]]),
    _m([[1, 0, 0], [0, 0, 0], [0, 0, 0], [-2, 0, 0]]))


def _roots(*roots) -> Polynomial:
    return Polynomial.from_roots(*roots)


# -- frozen expected values -----------------------------------------------------------

EXPECTED: dict[str, dict[str, object]] = {
    "psi of AB, BA, AC, CA": {
        "psi_BA": _roots(0, 0),
        "psi_AC": _roots(0, 0),
        "psi_CA": _roots(0, 0),
        "psi_AB": _roots(0, 0, 0),
    },
    "psi of I - AB and I - BA": {
        "psi_(I-AB)": _roots(7, 1, 0),
        "psi_(I-BA)": _roots(7, 0, 1, 1),
        "i(I-AB)": 1,
        "i(I-BA)": 1,
    },
    "special sum of C + N": {
        "psi_A": _roots(-2, -2, 0, 0, 0),
        "A^2A^- + I - AA^-": Matrix.block_diag(CN_CORE, _m([[0, 1, 0], [0, 0, 0], [0, 0, 1]])),
        "psi_(A^2A^- + I - AA^-)": _roots(1, 0, 0, -2, -2),
    },
    "BC = 0, i(A) = 2, i(M) = 3": {
        "i(A)": 2,
        "i(M)": 3,
        "A^D": _m([[2, 0, 0], [-8, 0, 0], [-6, 0, 0]]),
        "M^D": _m([
            [2, 0, 0, 4, -2, -8, -2, -4, 2],
            [-8, 0, 0, -16, 8, 32, 8, 16, -8],
            [-6, 0, 0, -12, 6, 24, 6, 12, -6],
            [4, 0, 0, 8, -4, -16, -4, -8, 4],
            [-16, 0, 0, -32, 16, 64, 16, 32, -16],
            [-12, 0, 0, -24, 12, 48, 12, 24, -12],
            [0, 0, 0, 0, 0, 0, 0, 0, 0],
            [38, 0, 0, 76, -38, -152, -38, -76, 38],
            [4, 0, 0, 8, -4, -16, -4, -8, 4],
        ]),
    },
    "BC = 0, i(A) = i(M) = 3": {"i(A)": 3, "i(M)": 3},
    "BC = 0, i(A) = 1, i(M) = 3": {"i(A)": 1, "i(M)": 3},
}


def _compute_psi_products() -> dict[str, object]:
    A, B, C = PSI_A, PSI_B, PSI_C
    return {"psi_BA": min_poly(B @ A), "psi_AC": min_poly(A @ C),
            "psi_CA": min_poly(C @ A), "psi_AB": min_poly(A @ B)}


def _compute_psi_identity_shift() -> dict[str, object]:
    I = Matrix.identity(5)
    K, L = I - SHIFT_A @ SHIFT_B, I - SHIFT_B @ SHIFT_A
    return {"psi_(I-AB)": min_poly(K), "psi_(I-BA)": min_poly(L),
            "i(I-AB)": drazin_index(K), "i(I-BA)": drazin_index(L)}


def _compute_special_sum() -> dict[str, object]:
    A, Am = CN_A, CN_AMINUS
    AAm = A @ Am
    S = A @ AAm + Matrix.identity(5) - AAm
    return {"psi_A": min_poly(A), "A^2A^- + I - AA^-": S, "psi_(A^2A^- + I - AA^-)": min_poly(S)}


def _compute_blocks(blk: AntiTriangularBlocks, full: bool) -> Callable[[], dict[str, object]]:
    def run() -> dict[str, object]:
        dm = drazin(assemble(blk))
        out: dict[str, object] = {"i(A)": drazin_index(blk.A), "i(M)": dm.index}
        if full:
            out["A^D"] = drazin(blk.A).inverse
            out["M^D"] = dm.inverse
        return out
    return run


COMPUTE: dict[str, Callable[[], dict[str, object]]] = {
    "psi of AB, BA, AC, CA": _compute_psi_products,
    "psi of I - AB and I - BA": _compute_psi_identity_shift,
    "special sum of C + N": _compute_special_sum,
    "BC = 0, i(A) = 2, i(M) = 3": _compute_blocks(BC_ZERO_I3, full=True),
    "BC = 0, i(A) = i(M) = 3": _compute_blocks(BC_ZERO_LOWER, full=False),
    "BC = 0, i(A) = 1, i(M) = 3": _compute_blocks(BC_ZERO_UPPER, full=False),
}


def render(value: object) -> str:
    if isinstance(value, Polynomial):
        return format_factored(value)
    if isinstance(value, Matrix):
        return "\n" + "\n".join("      " + line for line in format_matrix(value).splitlines())
    return str(value)


def _sep(text: str) -> str:
    return text if text.startswith("\n") else " " + text


@dataclass
class ExampleOutcome:
    name: str
    mismatches: list[str]
    lines: list[str]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def check_example(name: str, expected: Mapping[str, object]) -> ExampleOutcome:
    got = COMPUTE[name]()
    mismatches = [key for key in expected if got.get(key) != expected[key]]
    lines = [f"[{'ok' if not mismatches else 'MISMATCH'}] {name}"]
    for key, want in expected.items():
        mark = "=" if key not in mismatches else "!="
        lines.append(f"    {key} {mark}{_sep(render(got.get(key)))}")
        if key in mismatches:
            lines.append(f"    expected{_sep(render(want))}")
    return ExampleOutcome(name, mismatches, lines)


def reproduce(expected: Mapping[str, Mapping[str, object]] | None = None) -> tuple[bool, list[str]]:
    """Recompute all examples; returns (all reproduced, report lines)."""
    table = EXPECTED if expected is None else expected
    outcomes = [check_example(name, table[name]) for name in COMPUTE]
    lines = [line for o in outcomes for line in o.lines]
    passed = sum(o.ok for o in outcomes)
    lines.append(f"{passed}/{len(outcomes)} examples reproduced")
    return passed == len(outcomes), lines


def special_sum_identity_report() -> dict[str, bool]:
    """Both minimal-polynomial identities on the special-sum example."""
    A, Am = CN_A, CN_AMINUS
    psi = min_poly(A)
    AAm = A @ Am
    S = A @ AAm + Matrix.identity(5) - AAm
    return {
        "psi_A = lambda psi_(A^2A^-)": psi == LAMBDA * min_poly(A @ AAm),
        "psi_(A^2A^-+I-AA^-) = lcm(psi_A / lambda, lambda - 1)":
            min_poly(S) == poly_lcm(psi // LAMBDA, Polynomial([-1, 1])),
    }
