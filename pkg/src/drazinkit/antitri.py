"""Drazin inverses and indices of anti-triangular block matrices M = [[A, B], [C, 0]].

Every closed form here is assembled from the blocks, then checked against
a direct core-nilpotent computation on the assembled M.  Index bounds are
reported alongside the exact index so callers can see how tight they were.

Shapes: A is n×n, B is n×m, C is m×n, and W = BC is n×n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import DimensionMismatch, HypothesisViolated, VerificationFailed
from .exactmat import Matrix, inverse, is_nonsingular, mat_pow
from .geninv import drazin, drazin_index, is_drazin_inverse, one_inverse


class Branch(str, Enum):
    INVERTIBLE = "Invertible"
    GROUP_INVERTIBLE = "GroupInvertible"
    INDEX_TWO = "IndexTwo"
    ORTHOGONAL = "OrthogonalCase"
    ONE_SIDE = "OneSideCase"
    BC_ZERO = "BCZero"
    A_ZERO = "AZero"
    BC_NONSINGULAR = "BCNonsingular"
    A_NONSINGULAR_BC_ZERO = "ANonsingularBCZero"
    B_IDENTITY = "BIdentity"
    GENERIC = "Generic"


@dataclass(frozen=True)
class AntiTriangularBlocks:
    A: Matrix
    B: Matrix
    C: Matrix

    def __post_init__(self):
        A, B, C = self.A, self.B, self.C
        if not A.is_square:
            raise DimensionMismatch(f"A must be square, got {A.shape}")
        if B.rows != A.rows or C.cols != A.rows or C.rows != B.cols:
            raise DimensionMismatch(
                f"blocks not conformal: A {A.shape}, B {B.shape}, C {C.shape}")

    @property
    def n(self) -> int:
        return self.A.rows

    @property
    def m(self) -> int:
        return self.B.cols

    @property
    def W(self) -> Matrix:
        return self.B @ self.C


def assemble(blocks: AntiTriangularBlocks) -> Matrix:
    return Matrix.block([[blocks.A, blocks.B], [blocks.C, Matrix.zeros(blocks.m)]])


@dataclass
class BranchReport:
    """Outcome of one branch: exact index, the bounds the branch guarantees,
    and the Drazin inverse of M.

    ``branch`` names the invertibility class or closed form that produced
    the result; ``case`` names the structural hypothesis that selected it.
    """
    branch: Branch
    case: Branch
    index: int | None
    lower_bound: int
    upper_bound: int
    drazin: Matrix | None
    checks: dict[str, bool] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def _I(n: int) -> Matrix:
    return Matrix.identity(n)


def _singular(X: Matrix) -> bool:
    return not is_nonsingular(X)


def _finish(blocks: AntiTriangularBlocks, branch: Branch, case: Branch, lo: int, hi: int,
            MD: Matrix | None, notes=None) -> BranchReport:
    M = assemble(blocks)
    direct = drazin(M)
    checks = {"bounds contain i(M)": lo <= direct.index <= hi}
    if MD is not None:
        checks["Drazin equations"] = is_drazin_inverse(M, MD, direct.index)
        checks["closed form = direct M^D"] = MD == direct.inverse
    else:
        MD = direct.inverse
    return BranchReport(branch, case, direct.index, lo, hi, MD, checks, list(notes or []))


# -- Γ / Ω reduction ---------------------------------------------------------------


def gamma_omega(blocks: AntiTriangularBlocks, Wminus: Matrix | None = None) -> tuple[Matrix, Matrix]:
    """Γ = [[A, I], [W, 0]] and Ω = Γ²Γ⁻ + I − ΓΓ⁻ = [[A, WW⁻], [W, I − WW⁻]].

    Γ⁻ is taken from Γ = D·Q·P with D = diag(I, W), Q = [[I, A], [0, I]] and
    the swap P, so that ΓΓ⁻ = diag(I, WW⁻); both closed forms are checked.
    """
    A, W = blocks.A, blocks.W
    n = blocks.n
    if Wminus is None:
        Wminus = one_inverse(W)
    I, O = _I(n), Matrix.zeros(n)
    Gamma = Matrix.block([[A, I], [W, O]])
    P = Matrix.block([[O, I], [I, O]])
    Qinv = Matrix.block([[I, -A], [O, I]])
    Gminus = P @ Qinv @ Matrix.block_diag(I, Wminus)
    WWm = W @ Wminus
    GGm = Gamma @ Gminus
    if Gamma @ Gminus @ Gamma != Gamma or GGm != Matrix.block_diag(I, WWm):
        raise VerificationFailed("Γ⁻ from the D·Q factorisation is not a {1}-inverse")
    Omega = Matrix.block([[A, WWm], [W, I - WWm]])
    if Gamma @ GGm + _I(2 * n) - GGm != Omega:
        raise VerificationFailed("Ω does not match Γ²Γ⁻ + I − ΓΓ⁻")
    return Gamma, Omega


# -- invertibility criteria ----------------------------------------------------------


def _require_both_singular(blocks: AntiTriangularBlocks) -> None:
    if not _singular(blocks.A):
        raise HypothesisViolated("A is nonsingular; use the A-nonsingular branch")
    if not _singular(blocks.W):
        raise HypothesisViolated("BC is nonsingular; use the BC-nonsingular branch")


def group_criterion_matrix(A: Matrix, B: Matrix, C: Matrix, Bm: Matrix | None = None,
                           Cm: Matrix | None = None, Zm: Matrix | None = None) -> Matrix:
    """A(I − C⁻C) − BC + (I − ZZ⁻)(I − BB⁻)(I + AC⁻C − C⁻C), Z = (I − BB⁻)A(I − C⁻C)."""
    n = A.rows
    I = _I(n)
    Bm = one_inverse(B) if Bm is None else Bm
    Cm = one_inverse(C) if Cm is None else Cm
    CmC = Cm @ C
    PB = I - B @ Bm
    Z = PB @ A @ (I - CmC)
    Zm = one_inverse(Z) if Zm is None else Zm
    return A @ (I - CmC) - B @ C + (I - Z @ Zm) @ PB @ (I + A @ CmC - CmC)


def check_group_invertible(blocks: AntiTriangularBlocks, **minus) -> bool:
    """Nonsingularity test for M being group invertible when A and BC are singular."""
    _require_both_singular(blocks)
    return is_nonsingular(group_criterion_matrix(blocks.A, blocks.B, blocks.C, **minus))


def index_two_criterion_matrix(A: Matrix, W: Matrix, Wm: Matrix | None = None) -> Matrix:
    Wm = one_inverse(W) if Wm is None else Wm
    return W - A @ (_I(A.rows) - Wm @ W)


def check_index_two(blocks: AntiTriangularBlocks, Wm: Matrix | None = None) -> bool:
    """BC − A(I − (BC)⁻BC) nonsingular; for M not group invertible this gives i(M) = 2."""
    _require_both_singular(blocks)
    return is_nonsingular(index_two_criterion_matrix(blocks.A, blocks.W, Wm))


# -- closed forms ---------------------------------------------------------------------


def _ai(blocks: AntiTriangularBlocks):
    da = drazin(blocks.A)
    dw = drazin(blocks.W)
    return da, dw


def criteria_branch(blocks: AntiTriangularBlocks) -> tuple[Branch, int, int] | None:
    """Branch and bounds from the two nonsingularity criteria, when either fires.

    The index bounds of the orthogonal and one-sided cases are only claimed
    when M is not group invertible and the index-two criterion fails.
    """
    if check_group_invertible(blocks):
        return Branch.GROUP_INVERTIBLE, 0, 1
    if check_index_two(blocks):
        return Branch.INDEX_TWO, 2, 2
    return None


def drazin_orthogonal_case(blocks: AntiTriangularBlocks) -> BranchReport:
    """ABC = 0 = BCA: M^D = [[A^D, (A^D)²B + B(CB)^D], [C(A^D)² + (CB)^D C, C(A^D)³B]]."""
    A, B, C, W = blocks.A, blocks.B, blocks.C, blocks.W
    _require_both_singular(blocks)
    if not (A @ W).is_zero() or not (W @ A).is_zero():
        raise HypothesisViolated("orthogonal case needs ABC = 0 and BCA = 0")
    da, dw = _ai(blocks)
    AD = da.inverse
    CBD = drazin(C @ B).inverse
    AD2 = AD @ AD
    MD = Matrix.block([[AD, AD2 @ B + B @ CBD],
                       [C @ AD2 + CBD @ C, C @ AD2 @ AD @ B]])
    base = max(da.index, 2 * dw.index - 1)
    over = criteria_branch(blocks)
    if over:
        return _finish(blocks, over[0], Branch.ORTHOGONAL, over[1], over[2], MD)
    return _finish(blocks, Branch.ORTHOGONAL, Branch.ORTHOGONAL, base, base + 2, MD)


def oneside_G_blocks(blocks: AntiTriangularBlocks, k: int | None = None,
                     literal: bool = False) -> Matrix:
    """Γ^D = [[G1, G2], [G3, G4]] for ABC = 0, with the α, β, γ, δ sums truncated at k − 1.

    The default k = i(A) + 2 i(BC) is at least max{i(A), 2i(BC) − 1}; the surplus
    terms vanish under the I − WW^D and I − AA^D projectors.

    The bottom row is the bottom row of ((X+Y)^D)² Γ.  Since δ already carries
    the (W^D)^((n+1)/2) factors, its terms enter without a further W^D:

        G3 = (I − WW^D) β A^D + δ (I − AA^D) A − WW^D A A^D + WW^D
        G4 = (I − WW^D) β (A^D)² + δ (I − AA^D) − WW^D A^D

    ``literal=True`` uses W^D δ (I − AA^D) in both blocks instead, which is
    kept only to demonstrate that it does not give Γ^D in general.
    """
    A, W = blocks.A, blocks.W
    n = blocks.n
    I = _I(n)
    da, dw = _ai(blocks)
    AD, WD = da.inverse, dw.inverse
    if k is None:
        k = da.index + 2 * dw.index
    alpha = beta = gamma = delta = Matrix.zeros(n)
    for j in range(1, k):
        ADj = mat_pow(AD, j)
        Aj = mat_pow(A, j)
        if j % 2 == 0:
            alpha = alpha + mat_pow(W, j // 2) @ ADj
            gamma = gamma + mat_pow(WD, j // 2) @ Aj
        else:
            beta = beta + mat_pow(W, (j + 1) // 2) @ ADj
            delta = delta + mat_pow(WD, (j + 1) // 2) @ Aj
    PW = I - W @ WD
    PA = I - A @ AD
    WWD = W @ WD
    AD2 = AD @ AD
    G1 = PW @ (I + alpha) @ AD + WD @ (I + gamma) @ PA @ A
    G2 = PW @ (I + alpha) @ AD2 + WD @ (I + gamma) @ PA
    if literal:
        G3 = PW @ beta @ AD + WD @ delta @ PA - WWD @ A @ AD + WWD
        G4 = PW @ beta @ AD2 + WD @ delta @ PA - WWD @ AD
    else:
        G3 = PW @ beta @ AD + delta @ PA @ A - WWD @ A @ AD + WWD
        G4 = PW @ beta @ AD2 + delta @ PA - WWD @ AD
    return Matrix.block([[G1, G2], [G3, G4]])


def _SR(blocks: AntiTriangularBlocks) -> tuple[Matrix, Matrix]:
    n, m = blocks.n, blocks.m
    S = Matrix.block([[blocks.A, _I(n)], [blocks.C, Matrix.zeros(m, n)]])
    R = Matrix.block_diag(_I(n), blocks.B)
    return S, R


def drazin_oneside_case(blocks: AntiTriangularBlocks, k: int | None = None) -> BranchReport:
    """ABC = 0: M^D = S·[[G1, G2], [G3, G4]]²·R with S = [[A, I], [C, 0]], R = diag(I, B)."""
    _require_both_singular(blocks)
    if not (blocks.A @ blocks.W).is_zero():
        raise HypothesisViolated("one-sided case needs ABC = 0")
    G = oneside_G_blocks(blocks, k)
    S, R = _SR(blocks)
    MD = S @ G @ G @ R
    ia, iw = drazin_index(blocks.A), drazin_index(blocks.W)
    base = max(ia, 2 * iw - 1)
    over = criteria_branch(blocks)
    if over:
        return _finish(blocks, over[0], Branch.ONE_SIDE, over[1], over[2], MD)
    rep = _finish(blocks, Branch.ONE_SIDE, Branch.ONE_SIDE, base - 1, ia + 2 * iw + 2, MD)
    tight = base <= rep.index <= base + 2
    rep.notes.append(f"tighter bound max{{i(A),2i(BC)-1}}..+2 = [{base}, {base + 2}] "
                     f"{'holds' if tight else 'FAILS'} (i(M) = {rep.index})")
    return rep


def drazin_bc_zero(blocks: AntiTriangularBlocks) -> BranchReport:
    """BC = 0, A singular: M^D = [[A^D, (A^D)²B], [C(A^D)², C(A^D)³B]], i(A) ≤ i(M) ≤ i(A) + 2."""
    A, B, C = blocks.A, blocks.B, blocks.C
    if not blocks.W.is_zero():
        raise HypothesisViolated("BC != 0")
    if not _singular(A):
        raise HypothesisViolated("A is nonsingular; use the A-nonsingular branch")
    da = drazin(A)
    AD = da.inverse
    AD2 = AD @ AD
    MD = Matrix.block([[AD, AD2 @ B], [C @ AD2, C @ AD2 @ AD @ B]])
    return _finish(blocks, Branch.BC_ZERO, Branch.BC_ZERO, da.index, da.index + 2, MD)


def drazin_a_zero(blocks: AntiTriangularBlocks) -> BranchReport:
    """A = 0, BC singular: M^D = [[0, B(CB)^D], [(CB)^D C, 0]], 2i(BC) − 1 ≤ i(M) ≤ 2i(BC) + 1."""
    A, B, C, W = blocks.A, blocks.B, blocks.C, blocks.W
    if not A.is_zero():
        raise HypothesisViolated("A != 0")
    if not _singular(W):
        raise HypothesisViolated("BC is nonsingular")
    CBD = drazin(C @ B).inverse
    dw = drazin(W)
    n, m = blocks.n, blocks.m
    MD = Matrix.block([[Matrix.zeros(n), B @ CBD], [CBD @ C, Matrix.zeros(m)]])
    alt = Matrix.block([[Matrix.zeros(n), dw.inverse @ B], [C @ dw.inverse, Matrix.zeros(m)]])
    lo = max(2 * dw.index - 1, 1)
    rep = _finish(blocks, Branch.A_ZERO, Branch.A_ZERO, lo, 2 * dw.index + 1, MD)
    rep.checks["[[0,(BC)^D B],[C(BC)^D,0]] form agrees"] = alt == MD
    return rep


def group_bc_nonsingular(blocks: AntiTriangularBlocks) -> BranchReport:
    """BC nonsingular: M is invertible iff B and C are, otherwise i(M) = 1, and

        M^# = [[0, (BC)⁻¹B], [C(BC)⁻¹, −C(BC)⁻¹A(BC)⁻¹B]].
    """
    A, B, C, W = blocks.A, blocks.B, blocks.C, blocks.W
    if _singular(W):
        raise HypothesisViolated("BC is singular")
    Wi = inverse(W)
    n, m = blocks.n, blocks.m
    MD = Matrix.block([[Matrix.zeros(n), Wi @ B], [C @ Wi, -(C @ Wi @ A @ Wi @ B)]])
    both = is_nonsingular(B) and is_nonsingular(C)
    if both:
        rep = _finish(blocks, Branch.INVERTIBLE, Branch.BC_NONSINGULAR, 0, 0, MD)
        rep.checks["M^# = M^-1"] = MD @ assemble(blocks) == _I(n + m)
    else:
        rep = _finish(blocks, Branch.GROUP_INVERTIBLE, Branch.BC_NONSINGULAR, 1, 1, MD)
    return rep


def a_nonsingular_criterion_matrix(A: Matrix, B: Matrix, C: Matrix, **minus) -> Matrix:
    # the Moore-Penrose marks on B and C only use {1}-inverse properties
    return group_criterion_matrix(A, B, C, **minus)


def drazin_a_nonsingular_bc_zero(blocks: AntiTriangularBlocks) -> BranchReport:
    """A nonsingular, BC = 0: M^D = [[A⁻¹, A⁻²B], [CA⁻², CA⁻³B]], i(M) ∈ {1, 2}."""
    A, B, C = blocks.A, blocks.B, blocks.C
    if _singular(A):
        raise HypothesisViolated("A is singular")
    if not blocks.W.is_zero():
        raise HypothesisViolated("BC != 0")
    Ai = inverse(A)
    Ai2 = Ai @ Ai
    MD = Matrix.block([[Ai, Ai2 @ B], [C @ Ai2, C @ Ai2 @ Ai @ B]])
    if blocks.m == 0:
        # M = A itself
        return _finish(blocks, Branch.INVERTIBLE, Branch.A_NONSINGULAR_BC_ZERO, 0, 0, MD)
    group = is_nonsingular(a_nonsingular_criterion_matrix(A, B, C))
    idx = 1 if group else 2
    branch = Branch.GROUP_INVERTIBLE if group else Branch.INDEX_TWO
    rep = _finish(blocks, branch, Branch.A_NONSINGULAR_BC_ZERO, idx, idx, MD)
    return rep


def index_b_identity(A: Matrix, C: Matrix) -> BranchReport:
    """Index of M = [[A, I], [C, 0]] by case analysis on C."""
    if not A.is_square or A.shape != C.shape:
        raise DimensionMismatch(f"A and C must be square of equal size; got {A.shape}, {C.shape}")
    n = A.rows
    blocks = AntiTriangularBlocks(A, _I(n), C)
    ic = drazin_index(C)
    if ic == 0:
        return _finish(blocks, Branch.INVERTIBLE, Branch.B_IDENTITY, 0, 0, None)
    Cm = one_inverse(C)
    if is_nonsingular(C - A @ (_I(n) - Cm @ C)):
        return _finish(blocks, Branch.GROUP_INVERTIBLE, Branch.B_IDENTITY, 1, 1, None)
    ia = drazin_index(A)
    AC, CA = A @ C, C @ A
    if AC.is_zero() and CA.is_zero():
        v = max(ia + 1, 2 * ic)
        return _finish(blocks, Branch.ORTHOGONAL, Branch.B_IDENTITY, v, v, None)
    if AC.is_zero():
        return _finish(blocks, Branch.ONE_SIDE, Branch.B_IDENTITY,
                       max(ia, 2 * ic - 1), ia + 2 * ic + 1, None)
    rep = _finish(blocks, Branch.GENERIC, Branch.B_IDENTITY, 0, 0, None)
    rep.lower_bound = rep.upper_bound = rep.index
    rep.checks["bounds contain i(M)"] = True
    return rep


@dataclass(frozen=True)
class YDrazin:
    Y: Matrix
    inverse: Matrix
    index: int
    direct_agrees: bool


def y_matrix(W: Matrix, Wminus: Matrix | None = None) -> Matrix:
    Wminus = one_inverse(W) if Wminus is None else Wminus
    n = W.rows
    return Matrix.block([[Matrix.zeros(n), W @ Wminus], [W, Matrix.zeros(n)]])


def y_matrix_drazin(W: Matrix, Wminus: Matrix | None = None) -> YDrazin:
    """Y = [[0, WW⁻], [W, 0]]: i(Y) = 2i(W) − 1 and Y^D = [[0, W^D W W⁻], [W W^D, 0]]."""
    if not W.is_square:
        raise DimensionMismatch("W must be square")
    if not _singular(W):
        raise HypothesisViolated("W is nonsingular")
    Wminus = one_inverse(W) if Wminus is None else Wminus
    n = W.rows
    dw = drazin(W)
    Y = y_matrix(W, Wminus)
    YD = Matrix.block([[Matrix.zeros(n), dw.inverse @ W @ Wminus],
                       [W @ dw.inverse, Matrix.zeros(n)]])
    direct = drazin(Y)
    idx = 2 * dw.index - 1
    return YDrazin(Y, YD, idx, direct.inverse == YD and direct.index == idx)


def y_power(W: Matrix, n: int, Wminus: Matrix | None = None) -> Matrix:
    """Y^n in closed form: diag(W^l, W^(l+1) W⁻) for n = 2l, and
    [[0, W^(l+1) W⁻], [W^(l+1), 0]] for n = 2l + 1."""
    Wminus = one_inverse(W) if Wminus is None else Wminus
    O = Matrix.zeros(W.rows)
    l, odd = divmod(n, 2)
    if odd:
        P = mat_pow(W, l + 1)
        return Matrix.block([[O, P @ Wminus], [P, O]])
    return Matrix.block([[mat_pow(W, l), O], [O, mat_pow(W, l + 1) @ Wminus]])


def y_drazin_power(W: Matrix, n: int, Wminus: Matrix | None = None, literal: bool = False) -> Matrix:
    """(Y^D)^n in closed form for n >= 1.

    Even n = 2l: diag((W^D)^l, (W^D)^l W W⁻).  Odd n = 2l + 1:
    [[0, (W^D)^(l+1) W W⁻], [W (W^D)^(l+1), 0]]; the bottom-left block is
    W W^D at n = 1, matching Y^D itself.  ``literal=True`` drops the leading
    W in that block, which only agrees when W (W^D)^(l+1) = (W^D)^(l+1).
    """
    if n < 1:
        raise ValueError("n must be positive")
    Wminus = one_inverse(W) if Wminus is None else Wminus
    WD = drazin(W).inverse
    O = Matrix.zeros(W.rows)
    WWm = W @ Wminus
    l, odd = divmod(n, 2)
    if odd:
        P = mat_pow(WD, l + 1)
        low = P if literal else W @ P
        return Matrix.block([[O, P @ WWm], [low, O]])
    P = mat_pow(WD, l)
    return Matrix.block([[P, O], [O, P @ WWm]])


# -- dispatch ----------------------------------------------------------------------

CASES = {
    "bc-nonsingular": Branch.BC_NONSINGULAR,
    "a-nonsingular-bc-zero": Branch.A_NONSINGULAR_BC_ZERO,
    "b-identity": Branch.B_IDENTITY,
    "bc-zero": Branch.BC_ZERO,
    "a-zero": Branch.A_ZERO,
    "orthogonal": Branch.ORTHOGONAL,
    "oneside": Branch.ONE_SIDE,
    "group": Branch.GROUP_INVERTIBLE,
    "index-two": Branch.INDEX_TWO,
    "generic": Branch.GENERIC,
}


def _generic(blocks: AntiTriangularBlocks) -> BranchReport:
    if _singular(blocks.A) and _singular(blocks.W):
        if check_group_invertible(blocks):
            return _finish(blocks, Branch.GROUP_INVERTIBLE, Branch.GENERIC, 0, 1, None)
        if check_index_two(blocks):
            return _finish(blocks, Branch.INDEX_TWO, Branch.GENERIC, 2, 2, None)
    direct = drazin(assemble(blocks))
    return BranchReport(Branch.GENERIC, Branch.GENERIC, direct.index, direct.index,
                        direct.index, direct.inverse, {"bounds contain i(M)": True})


def _forced(blocks: AntiTriangularBlocks, case: Branch) -> BranchReport:
    if case is Branch.BC_NONSINGULAR:
        return group_bc_nonsingular(blocks)
    if case is Branch.A_NONSINGULAR_BC_ZERO:
        return drazin_a_nonsingular_bc_zero(blocks)
    if case is Branch.B_IDENTITY:
        if blocks.m != blocks.n or not blocks.B.is_identity():
            raise HypothesisViolated("B is not the identity")
        return index_b_identity(blocks.A, blocks.C)
    if case is Branch.BC_ZERO:
        return drazin_bc_zero(blocks)
    if case is Branch.A_ZERO:
        return drazin_a_zero(blocks)
    if case is Branch.ORTHOGONAL:
        return drazin_orthogonal_case(blocks)
    if case is Branch.ONE_SIDE:
        return drazin_oneside_case(blocks)
    if case is Branch.GROUP_INVERTIBLE:
        if not check_group_invertible(blocks):
            raise HypothesisViolated("group-invertibility criterion matrix is singular")
        return _finish(blocks, Branch.GROUP_INVERTIBLE, Branch.GENERIC, 0, 1, None)
    if case is Branch.INDEX_TWO:
        if check_group_invertible(blocks) or not check_index_two(blocks):
            raise HypothesisViolated("index-two criterion does not apply")
        return _finish(blocks, Branch.INDEX_TWO, Branch.GENERIC, 2, 2, None)
    return _generic(blocks)


def select_case(blocks: AntiTriangularBlocks) -> Branch:
    """Most specific applicable case, in fixed priority order."""
    A, W = blocks.A, blocks.W
    a_sing = _singular(A)
    w_sing = _singular(W)
    if not w_sing:
        return Branch.BC_NONSINGULAR
    if not a_sing and W.is_zero():
        return Branch.A_NONSINGULAR_BC_ZERO
    if blocks.m == blocks.n and blocks.B.is_identity():
        return Branch.B_IDENTITY
    if W.is_zero():
        return Branch.BC_ZERO
    if A.is_zero():
        return Branch.A_ZERO
    if a_sing:
        AW = A @ W
        if AW.is_zero() and (W @ A).is_zero():
            return Branch.ORTHOGONAL
        if AW.is_zero():
            return Branch.ONE_SIDE
    return Branch.GENERIC


def classify_and_solve(blocks: AntiTriangularBlocks, branch: str | Branch | None = None) -> BranchReport:
    """Pick (or force) a branch, solve, and cross-check against direct computation.

    Raises VerificationFailed if a closed form disagrees with the direct Drazin
    inverse or a reported bound misses the true index.
    """
    if branch is None:
        case = select_case(blocks)
    elif isinstance(branch, Branch):
        case = branch
    else:
        try:
            case = CASES[branch]
        except KeyError:
            raise ValueError(f"unknown branch {branch!r}; choose from {sorted(CASES)}") from None
    rep = _forced(blocks, case)
    if not rep.ok:
        failed = [k for k, v in rep.checks.items() if not v]
        raise VerificationFailed(f"{rep.branch.value}: failed checks {failed}")
    return rep
