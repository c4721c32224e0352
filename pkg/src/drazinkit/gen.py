"""Seeded random instance recipes for the property suites.

Plain samples draw entries uniformly from {-2, ..., 2}.  Recipes that need
structure (a prescribed index, AB = 0, ...) conjugate block-diagonal
templates by unimodular integer matrices so entries stay integral.
"""

from __future__ import annotations

import random

from .exactmat import Matrix, is_nonsingular, null_space
from .antitri import AntiTriangularBlocks
from .geninv import one_inverse, one_inverse_family

ENTRIES = (-2, -1, 0, 1, 2)


def rand_matrix(rng: random.Random, rows: int, cols: int, entries=ENTRIES, zero_bias: float = 0.0) -> Matrix:
    return Matrix(([0 if rng.random() < zero_bias else rng.choice(entries) for _ in range(cols)]
                   for _ in range(rows)), cols=cols)


def zero_row(rng: random.Random, A: Matrix) -> Matrix:
    if not A.rows:
        return A
    i = rng.randrange(A.rows)
    rows = A.tolist()
    rows[i] = [0] * A.cols
    return Matrix(rows, cols=A.cols)


def unimodular(rng: random.Random, n: int, steps: int | None = None) -> tuple[Matrix, Matrix]:
    """Random integer U with det ±1, returned with its inverse."""
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    Ui = [[int(i == j) for j in range(n)] for i in range(n)]
    if n > 1:
        for _ in range(steps if steps is not None else 2 * n):
            i, j = rng.sample(range(n), 2)
            c = rng.choice((-1, 1))
            # U <- U·E with E = I + c e_i e_j^T (column op), Ui <- E^-1·Ui (row op)
            for r in range(n):
                U[r][j] += c * U[r][i]
            Ui[i] = [a - c * b for a, b in zip(Ui[i], Ui[j])]
        perm = list(range(n))
        rng.shuffle(perm)
        U = [[row[p] for p in perm] for row in U]
        Ui = [Ui[p] for p in perm]
    return Matrix(U, cols=n), Matrix(Ui, cols=n)


def jordan_nilpotent(sizes) -> Matrix:
    n = sum(sizes)
    rows = [[0] * n for _ in range(n)]
    off = 0
    for s in sizes:
        for i in range(s - 1):
            rows[off + i][off + i + 1] = 1
        off += s
    return Matrix(rows, cols=n)


def random_partition(rng: random.Random, n: int) -> list[int]:
    parts = []
    while n:
        s = rng.randint(1, n)
        parts.append(s)
        n -= s
    return parts


def rand_nilpotent(rng: random.Random, n: int, min_index: int = 1) -> Matrix:
    """Nilpotent n×n matrix of index >= min_index (when n allows)."""
    if n == 0:
        return Matrix.zeros(0)
    while True:
        sizes = random_partition(rng, n)
        if max(sizes) >= min(min_index, n):
            break
    U, Ui = unimodular(rng, n)
    return U @ jordan_nilpotent(sizes) @ Ui


def rand_invertible(rng: random.Random, n: int) -> Matrix:
    while True:
        A = rand_matrix(rng, n, n)
        if is_nonsingular(A):
            return A


def rand_core_nilpotent(rng: random.Random, n: int, r: int | None = None, min_index: int = 1) -> Matrix:
    """U·diag(core, nilpotent)·U^-1 with a random split size r < n (singular result)."""
    if r is None:
        r = rng.randint(0, n - 1)
    core = rand_invertible(rng, r) if r else Matrix.zeros(0)
    N = rand_nilpotent(rng, n - r, min_index)
    U, Ui = unimodular(rng, n)
    return U @ Matrix.block_diag(core, N) @ Ui


def rand_square(rng: random.Random, n: int | None = None) -> Matrix:
    """Mixed recipe: plain, row-zeroed, low-rank product, or core-nilpotent template."""
    n = rng.randint(1, 6) if n is None else n
    recipe = rng.random()
    if recipe < 0.35:
        return rand_matrix(rng, n, n)
    if recipe < 0.55:
        return zero_row(rng, rand_matrix(rng, n, n))
    if recipe < 0.7:
        k = rng.randint(0, n)
        return rand_matrix(rng, n, k) @ rand_matrix(rng, k, n)
    return rand_core_nilpotent(rng, n)


def rand_singular(rng: random.Random, n: int | None = None) -> Matrix:
    n = rng.randint(1, 6) if n is None else n
    while True:
        recipe = rng.random()
        if recipe < 0.3:
            A = zero_row(rng, rand_matrix(rng, n, n))
        elif recipe < 0.45:
            k = rng.randint(0, n - 1)
            A = rand_matrix(rng, n, k) @ rand_matrix(rng, k, n)
        elif recipe < 0.55:
            A = rand_nilpotent(rng, n)
        else:
            A = rand_core_nilpotent(rng, n)
        if not is_nonsingular(A):
            return A


def rand_one_inverses(rng: random.Random, A: Matrix, count: int) -> list[Matrix]:
    """Canonical {1}-inverse moved around the family by random Z."""
    Am = one_inverse(A)
    return [one_inverse_family(A, Am, rand_matrix(rng, A.cols, A.rows)) for _ in range(count)]


def columns_matrix(vectors, rows: int) -> Matrix:
    if not vectors:
        return Matrix.zeros(rows, 0)
    return Matrix.from_columns(vectors, rows)


def rand_in_null(rng: random.Random, K: Matrix, cols: int) -> Matrix:
    """Random matrix X with K·X = 0 (columns in null(K))."""
    N = columns_matrix(null_space(K), K.cols)
    return N @ rand_matrix(rng, N.cols, cols)


# -- anti-triangular recipes ---------------------------------------------------------


def _dims(rng, nmax=4, mmax=4, nmin=1):
    return rng.randint(nmin, nmax), rng.randint(1, mmax)


def rand_blocks(rng: random.Random, n: int | None = None, m: int | None = None) -> AntiTriangularBlocks:
    n = rng.randint(1, 4) if n is None else n
    m = rng.randint(1, 4) if m is None else m
    zb = rng.choice((0.0, 0.3, 0.6))
    return AntiTriangularBlocks(rand_matrix(rng, n, n, zero_bias=zb),
                                rand_matrix(rng, n, m, zero_bias=zb),
                                rand_matrix(rng, m, n, zero_bias=zb))


def rand_blocks_singular(rng: random.Random) -> AntiTriangularBlocks:
    """A and BC both singular."""
    while True:
        n, m = _dims(rng)
        zb = rng.choice((0.0, 0.3, 0.6))
        r = rng.random()
        if r < 0.4:
            A = rand_singular(rng, n)
        else:
            A = zero_row(rng, rand_matrix(rng, n, n, zero_bias=zb))
        B = rand_matrix(rng, n, m, zero_bias=zb)
        C = rand_matrix(rng, m, n, zero_bias=zb)
        if rng.random() < 0.5 and m >= n:
            B = zero_row(rng, B.T).T if rng.random() < 0.5 else B
        blk = AntiTriangularBlocks(A, B, C)
        if not is_nonsingular(A) and not is_nonsingular(blk.W):
            return blk


def _split_template(rng: random.Random, n: int, m: int, one_sided: bool,
                    w_index1: bool = False) -> AntiTriangularBlocks:
    """A = V[[A1, 0], [A21, 0]]V⁻¹ and W = BC = V diag(0, W2) V⁻¹ so that AW = 0;
    with A21 = 0 also WA = 0."""
    n1 = rng.randint(1, n)          # ensures W singular
    n2 = n - n1
    V, Vi = unimodular(rng, n)
    A1 = rand_singular(rng, n1) if (n2 == 0 or rng.random() < 0.6) else rand_matrix(rng, n1, n1)
    if rng.random() < 0.35:
        A1 = rand_nilpotent(rng, n1, min_index=n1)
    A21 = rand_matrix(rng, n2, n1) if one_sided else Matrix.zeros(n2, n1)
    Atemp = Matrix.block([[A1, Matrix.zeros(n1, n2)], [A21, Matrix.zeros(n2)]])
    if w_index1:
        m = max(m, n2)
        while True:
            B2 = rand_matrix(rng, n2, m)
            C2 = rand_matrix(rng, m, n2)
            if is_nonsingular(B2 @ C2):
                break
    else:
        recipe = rng.random()
        if recipe < 0.4 and n2:
            # B2 = [I 0] and C2 stacked on a full-index nilpotent, so W2 = B2·C2 is nilpotent
            Nn = rand_nilpotent(rng, n2, min_index=n2)
            B2 = Matrix.block([[Matrix.identity(n2), Matrix.zeros(n2, max(m - n2, 0))]]) if m >= n2 else None
            if B2 is None:
                B2 = rand_matrix(rng, n2, m)
                C2 = rand_matrix(rng, m, n2)
            else:
                C2 = Matrix.block([[Nn], [rand_matrix(rng, m - n2, n2)]]) if m > n2 else Nn
        else:
            B2 = rand_matrix(rng, n2, m)
            C2 = rand_matrix(rng, m, n2)
    B = V @ Matrix.block([[Matrix.zeros(n1, m)], [B2]])
    C = Matrix.block([[Matrix.zeros(m, n1), C2]]) @ Vi
    return AntiTriangularBlocks(V @ Atemp @ Vi, B, C)


def rand_blocks_orthogonal(rng: random.Random) -> AntiTriangularBlocks:
    """A, BC singular with ABC = 0 = BCA."""
    while True:
        n, m = _dims(rng)
        blk = _split_template(rng, n, m, one_sided=False)
        if not is_nonsingular(blk.A):
            return blk


def rand_blocks_oneside(rng: random.Random) -> AntiTriangularBlocks:
    """A, BC singular with ABC = 0 (BCA usually nonzero)."""
    while True:
        if rng.random() < 0.5:
            n, m = _dims(rng)
            n = max(n, 2)
            blk = _split_template(rng, n, m, one_sided=True)
        else:
            # C built from null(AB)
            n, m = _dims(rng)
            A = rand_singular(rng, n)
            B = rand_matrix(rng, n, m, zero_bias=rng.choice((0.0, 0.4)))
            C = rand_in_null(rng, A @ B, n)
            blk = AntiTriangularBlocks(A, B, C)
        if not is_nonsingular(blk.A) and not is_nonsingular(blk.W):
            return blk


def rand_blocks_bc_zero(rng: random.Random, a_singular: bool = True) -> AntiTriangularBlocks:
    n, m = _dims(rng)
    A = rand_singular(rng, n) if a_singular else rand_invertible(rng, n)
    B = rand_matrix(rng, n, m, zero_bias=rng.choice((0.0, 0.5)))
    if rng.random() < 0.3:
        B = zero_row(rng, B.T).T
    C = rand_in_null(rng, B, n)
    return AntiTriangularBlocks(A, B, C)


def rand_blocks_a_zero(rng: random.Random) -> AntiTriangularBlocks:
    while True:
        n, m = _dims(rng)
        if rng.random() < 0.4:
            # BC with a prescribed nilpotent part
            W = rand_core_nilpotent(rng, n, min_index=rng.randint(1, n))
            B = W
            C = Matrix.identity(n)
            if rng.random() < 0.5:
                B, C = Matrix.identity(n), W
            blk = AntiTriangularBlocks(Matrix.zeros(n), B, C)
        else:
            blk = AntiTriangularBlocks(Matrix.zeros(n), rand_matrix(rng, n, m, zero_bias=0.3),
                                       rand_matrix(rng, m, n, zero_bias=0.3))
        if not is_nonsingular(blk.W):
            return blk


def rand_blocks_bc_nonsingular(rng: random.Random) -> AntiTriangularBlocks:
    while True:
        n = rng.randint(1, 3)
        m = rng.randint(n, 4)
        blk = AntiTriangularBlocks(rand_matrix(rng, n, n), rand_matrix(rng, n, m), rand_matrix(rng, m, n))
        if is_nonsingular(blk.W):
            return blk


def rand_blocks_b_identity(rng: random.Random, orthogonal: str | None = None) -> tuple[Matrix, Matrix]:
    """(A, C) pairs for M = [[A, I], [C, 0]]; orthogonal in {None, 'both', 'left'}."""
    n = rng.randint(1, 4)
    if orthogonal is None:
        r = rng.random()
        if r < 0.5:
            return rand_matrix(rng, n, n, zero_bias=0.3), rand_singular(rng, n)
        return rand_matrix(rng, n, n), rand_matrix(rng, n, n)
    blk = _split_template(rng, n, n, one_sided=(orthogonal == "left"))
    # reinterpret: A from template, C = W (so AC = 0, and CA = 0 when 'both')
    return blk.A, blk.W
