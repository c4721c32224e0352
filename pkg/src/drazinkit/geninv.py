"""Drazin index, {1}-inverses, core-nilpotent decomposition and Drazin inverses.

All computations are exact.  Every Drazin inverse leaving this module has
been checked against the three defining equations

    A^(k+1) D = A^k,    D A D = D,    A D = D A,      k = i(A).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (DimensionMismatch, IndexTooLarge, NotAOneInverse,
                     OrthogonalityViolated, VerificationFailed)
from .exactmat import (Matrix, column_space, inverse, mat_pow, null_space, rank,
                       rank_block, rank_normal_form)


def _require_square(A: Matrix, what: str = "matrix") -> None:
    if not A.is_square:
        raise DimensionMismatch(f"{what} must be square, got {A.shape}")


def rank_sequence(A: Matrix, upto: int) -> list[int]:
    """[rank(A^0), ..., rank(A^upto)]."""
    _require_square(A)
    out = []
    P = Matrix.identity(A.rows)
    for k in range(upto + 1):
        out.append(rank(P))
        if k < upto:
            P = P @ A
    return out


def drazin_index(A: Matrix) -> int:
    """Least k >= 0 with rank(A^k) == rank(A^(k+1))."""
    _require_square(A)
    P = Matrix.identity(A.rows)
    r_prev = A.rows
    k = 0
    while True:
        P = P @ A
        r = rank(P)
        if r == r_prev:
            return k
        r_prev = r
        k += 1


def is_one_inverse(A: Matrix, X: Matrix) -> bool:
    return X.shape == (A.cols, A.rows) and A @ X @ A == A


def one_inverse(A: Matrix) -> Matrix:
    """Canonical {1}-inverse Q·[[I_r,0],[0,0]]·P from the rank normal form."""
    rnf = rank_normal_form(A)
    return rnf.Q @ rank_block(A.cols, A.rows, rnf.r) @ rnf.P


def one_inverse_family(A: Matrix, Aminus: Matrix, Z: Matrix) -> Matrix:
    """A^- + Z - A^- A Z A A^-; ranges over all of A{1} as Z varies."""
    if Aminus.shape != (A.cols, A.rows) or Z.shape != Aminus.shape:
        raise DimensionMismatch(
            f"A^- and Z must both have shape {(A.cols, A.rows)}; got {Aminus.shape}, {Z.shape}")
    if not is_one_inverse(A, Aminus):
        raise NotAOneInverse("seed matrix is not a {1}-inverse")
    return Aminus + Z - Aminus @ A @ Z @ A @ Aminus


@dataclass(frozen=True)
class CoreNilpotent:
    """A = U · diag(core, nil) · U^-1 with core invertible and nil nilpotent."""
    U: Matrix
    core: Matrix
    nil: Matrix
    k: int

    @property
    def r(self) -> int:
        return self.core.rows

    def reconstruct(self) -> Matrix:
        return self.U @ Matrix.block_diag(self.core, self.nil) @ inverse(self.U)


def core_nilpotent(A: Matrix) -> CoreNilpotent:
    """Split along col(A^k) ⊕ null(A^k), both A-invariant, with k = i(A)."""
    _require_square(A)
    n = A.rows
    k = drazin_index(A)
    Ak = mat_pow(A, k)
    cols = column_space(Ak) + null_space(Ak)
    U = Matrix.from_columns(cols, n) if n else Matrix.zeros(0, 0)
    Uinv = inverse(U)
    B = Uinv @ A @ U
    r = len(cols) - len(null_space(Ak))
    core = B.submatrix(0, r, 0, r)
    nil = B.submatrix(r, n, r, n)
    if not (B.submatrix(0, r, r, n).is_zero() and B.submatrix(r, n, 0, r).is_zero()):
        raise VerificationFailed("core-nilpotent split is not block diagonal")
    return CoreNilpotent(U, core, nil, k)


def drazin_equations(A: Matrix, D: Matrix, k: int | None = None) -> dict[str, bool]:
    """Evaluate the three defining equations for a Drazin inverse candidate."""
    if k is None:
        k = drazin_index(A)
    Ak = mat_pow(A, k)
    AD = A @ D
    return {
        "A^(k+1) D = A^k": Ak @ AD == Ak,
        "D A D = D": D @ AD == D,
        "A D = D A": AD == D @ A,
    }


def is_drazin_inverse(A: Matrix, D: Matrix, k: int | None = None) -> bool:
    return D.shape == A.shape and all(drazin_equations(A, D, k).values())


def _verified(A: Matrix, D: Matrix, k: int) -> Matrix:
    if not is_drazin_inverse(A, D, k):
        raise VerificationFailed("computed matrix fails the Drazin equations")
    return D


@dataclass(frozen=True)
class DrazinResult:
    inverse: Matrix
    index: int


def drazin(A: Matrix) -> DrazinResult:
    cn = core_nilpotent(A)
    if cn.r == 0:
        D = Matrix.zeros(A.rows)
    else:
        D = cn.U @ Matrix.block_diag(inverse(cn.core), Matrix.zeros(A.rows - cn.r)) @ inverse(cn.U)
    return DrazinResult(_verified(A, D, cn.k), cn.k)


def drazin_inverse(A: Matrix) -> Matrix:
    return drazin(A).inverse


def group_inverse(A: Matrix) -> Matrix:
    res = drazin(A)
    if res.index > 1:
        raise IndexTooLarge(f"matrix has index {res.index}; the group inverse needs index <= 1")
    return res.inverse


@dataclass(frozen=True)
class ClineResult:
    inverse: Matrix
    index_ab: int
    index_ba: int

    @property
    def index_gap(self) -> int:
        return abs(self.index_ab - self.index_ba)


def cline_drazin(A: Matrix, B: Matrix) -> ClineResult:
    """(AB)^D = A ((BA)^D)^2 B."""
    if A.cols != B.rows or B.cols != A.rows:
        raise DimensionMismatch(f"AB and BA must both be square; got {A.shape} and {B.shape}")
    AB = A @ B
    ba = drazin(B @ A)
    D = A @ ba.inverse @ ba.inverse @ B
    k = drazin_index(AB)
    return ClineResult(_verified(AB, D, k), k, ba.index)


def special_sum(A: Matrix, Aminus: Matrix) -> Matrix:
    """A^2 A^- + I - A A^-."""
    _require_square(A)
    if not is_one_inverse(A, Aminus):
        raise NotAOneInverse("A^- does not satisfy A X A = A")
    AAm = A @ Aminus
    return A @ AAm + Matrix.identity(A.rows) - AAm


def drazin_via_special_sum(A: Matrix, Aminus: Matrix) -> Matrix:
    """A^D recovered as ((A^2 A^- + I - A A^-)^D)^2 A."""
    S = drazin(special_sum(A, Aminus)).inverse
    return _verified(A, S @ S @ A, drazin_index(A))


def _check_orthogonal(X: Matrix, Y: Matrix, both: bool) -> None:
    if X.shape != Y.shape or not X.is_square:
        raise DimensionMismatch(f"X and Y must be square of equal size; got {X.shape}, {Y.shape}")
    if not (X @ Y).is_zero():
        raise OrthogonalityViolated("XY != 0")
    if both and not (Y @ X).is_zero():
        raise OrthogonalityViolated("YX != 0")


def additive_drazin_orthogonal(X: Matrix, Y: Matrix) -> DrazinResult:
    """(X+Y)^D = X^D + Y^D when XY = YX = 0; the index is max{i(X), i(Y)}."""
    _check_orthogonal(X, Y, both=True)
    dx, dy = drazin(X), drazin(Y)
    S = X + Y
    k = max(dx.index, dy.index)
    return DrazinResult(_verified(S, dx.inverse + dy.inverse, drazin_index(S)), k)


def additive_drazin_oneside(X: Matrix, Y: Matrix, k: int | None = None) -> Matrix:
    """Drazin inverse of X + Y when XY = 0:

        (I - YY^D) Σ_{j<k} Y^j (X^D)^j X^D  +  Y^D Σ_{j<k} (Y^D)^j X^j (I - XX^D)

    with k = i(X) + i(Y).  Terms with j >= i(Y) die against I - YY^D and terms
    with j >= i(X) against I - XX^D, so any k >= max{i(X), i(Y)} gives the
    same matrix.  Pass ``k`` explicitly to evaluate a different truncation.
    """
    _check_orthogonal(X, Y, both=False)
    n = X.rows
    I = Matrix.identity(n)
    dx, dy = drazin(X), drazin(Y)
    XD, YD = dx.inverse, dy.inverse
    if k is None:
        k = dx.index + dy.index
    left = Matrix.zeros(n)
    right = Matrix.zeros(n)
    t1 = I
    t2 = I
    for _ in range(k):
        left = left + t1
        right = right + t2
        t1 = Y @ t1 @ XD
        t2 = YD @ t2 @ X
    D = (I - Y @ YD) @ left @ XD + YD @ right @ (I - X @ XD)
    S = X + Y
    return _verified(S, D, drazin_index(S))
