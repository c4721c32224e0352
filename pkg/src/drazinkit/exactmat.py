"""Dense matrices over the rationals with exact Gaussian elimination.

Entries are :class:`fractions.Fraction`; a ``Matrix`` is an immutable value.
Elimination always pivots on the first nonzero entry of the leftmost
unresolved column (scanning rows top-down), so every derived object,
including the rank normal form and the canonical {1}-inverse built from it,
is reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, MatrixParseError, SingularMatrix

ZERO = Fraction(0)
ONE = Fraction(1)


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point entries are not accepted; use int, str or Fraction")
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise MatrixParseError(f"not a rational literal: {value!r}") from exc
    return Fraction(value)


class Matrix:
    """Immutable rows x cols array of Fractions (0-dimensional shapes allowed)."""

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, data: Iterable[Iterable] = (), cols: int | None = None):
        rows = tuple(tuple(to_fraction(x) for x in row) for row in data)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != cols:
                raise DimensionMismatch("ragged rows in matrix literal")
        self.rows = len(rows)
        self.cols = cols
        self._data = rows
        self._hash = None

    @classmethod
    def _raw(cls, rows: tuple, cols: int) -> "Matrix":
        # trusted constructor: rows is already a tuple of tuples of Fractions
        obj = cls.__new__(cls)
        obj.rows = len(rows)
        obj.cols = cols
        obj._data = rows
        obj._hash = None
        return obj

    # -- constructors -----------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls._raw(tuple((ZERO,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)), n)

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        vals = [to_fraction(v) for v in values]
        return cls._raw(tuple(tuple(vals[i] if i == j else ZERO for j in range(n)) for i in range(n)), n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Fraction]], rows: int) -> "Matrix":
        cols = len(columns)
        return cls._raw(tuple(tuple(columns[j][i] for j in range(cols)) for i in range(rows)), cols)

    @classmethod
    def block(cls, blocks: Sequence[Sequence["Matrix"]]) -> "Matrix":
        """Assemble a block matrix; every block row must share a height and
        every block column a width."""
        if not blocks:
            return cls.zeros(0, 0)
        widths = [b.cols for b in blocks[0]]
        out = []
        width = sum(widths)
        for brow in blocks:
            if len(brow) != len(widths):
                raise DimensionMismatch("block rows have different lengths")
            height = brow[0].rows
            for j, b in enumerate(brow):
                if b.rows != height or b.cols != widths[j]:
                    raise DimensionMismatch(
                        f"block of shape {b.shape} does not fit ({height}, {widths[j]})")
            for i in range(height):
                row = []
                for b in brow:
                    row.extend(b._data[i])
                out.append(tuple(row))
        return cls._raw(tuple(out), width)

    @classmethod
    def block_diag(cls, *mats: "Matrix") -> "Matrix":
        n = sum(m.rows for m in mats)
        c = sum(m.cols for m in mats)
        out = []
        offset = 0
        for m in mats:
            for row in m._data:
                out.append((ZERO,) * offset + row + (ZERO,) * (c - offset - m.cols))
            offset += m.cols
        return cls._raw(tuple(out), c) if n else cls.zeros(0, c)

    # -- accessors --------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        return Matrix._raw(tuple(r[c0:c1] for r in self._data[r0:r1]), c1 - c0)

    def select_columns(self, idx: Sequence[int]) -> "Matrix":
        return Matrix._raw(tuple(tuple(r[j] for j in idx) for r in self._data), len(idx))

    @property
    def T(self) -> "Matrix":
        if not self.rows:
            return Matrix._raw(((),) * self.cols, 0)
        if not self.cols:
            return Matrix.zeros(0, self.rows)
        return Matrix._raw(tuple(zip(*self._data)), self.rows)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    def is_identity(self) -> bool:
        return self.is_square and all(
            x == (1 if i == j else 0) for i, r in enumerate(self._data) for j, x in enumerate(r))

    # -- arithmetic -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.shape, self._data))
        return self._hash

    def _check_same_shape(self, other: "Matrix", op: str) -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot {op} {self.shape} and {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other, "add")
        return Matrix._raw(tuple(tuple(a + b for a, b in zip(r, s))
                                 for r, s in zip(self._data, other._data)), self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other, "subtract")
        return Matrix._raw(tuple(tuple(a - b for a, b in zip(r, s))
                                 for r, s in zip(self._data, other._data)), self.cols)

    def __neg__(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self._data), self.cols)

    def scale(self, c) -> "Matrix":
        c = to_fraction(c)
        return Matrix._raw(tuple(tuple(c * a for a in r) for r in self._data), self.cols)

    def __rmul__(self, c) -> "Matrix":
        return self.scale(c)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def __pow__(self, k: int) -> "Matrix":
        return mat_pow(self, k)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self._data)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    def to_text(self) -> str:
        return format_matrix(self)


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    if A.cols != B.rows:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    bdata = B._data
    n = B.cols
    out = []
    for arow in A._data:
        acc = [ZERO] * n
        for a, brow in zip(arow, bdata):
            if a:
                for j, b in enumerate(brow):
                    if b:
                        acc[j] += a * b
        out.append(tuple(acc))
    return Matrix._raw(tuple(out), n)


def mat_pow(A: Matrix, k: int) -> Matrix:
    if not A.is_square:
        raise DimensionMismatch(f"power of non-square matrix {A.shape}")
    if k < 0:
        raise ValueError("negative matrix power")
    result = Matrix.identity(A.rows)
    base = A
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def identity_like(A: Matrix) -> Matrix:
    return Matrix.identity(A.rows)


# -- elimination ------------------------------------------------------------


@dataclass(frozen=True)
class Echelon:
    """Reduced row echelon form R = P·A with the transform and pivot columns."""
    reduced: Matrix
    transform: Matrix
    pivots: tuple[int, ...]


def rref(A: Matrix, track: bool = True) -> Echelon:
    m, n = A.shape
    rows = [list(r) for r in A._data]
    if track:
        trans = [[ONE if i == j else ZERO for j in range(m)] for i in range(m)]
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
            if track:
                trans[p], trans[r] = trans[r], trans[p]
        inv = 1 / rows[r][c]
        if inv != 1:
            rows[r] = [x * inv for x in rows[r]]
            if track:
                trans[r] = [x * inv for x in trans[r]]
        prow = rows[r]
        for i in range(m):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
                    if track:
                        trans[i] = [x - f * y for x, y in zip(trans[i], trans[r])]
        pivots.append(c)
        r += 1
    reduced = Matrix._raw(tuple(tuple(x) for x in rows), n)
    transform = Matrix._raw(tuple(tuple(x) for x in trans), m) if track else None
    return Echelon(reduced, transform, tuple(pivots))


def rank(A: Matrix) -> int:
    """Rank by exact forward elimination."""
    m, n = A.shape
    rows = [list(r) for r in A._data]
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[p], rows[r] = rows[r], rows[p]
        prow = rows[r]
        piv = prow[c]
        for i in range(r + 1, m):
            f = rows[i][c]
            if f:
                f = f / piv
                rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
        r += 1
    return r


def is_nonsingular(A: Matrix) -> bool:
    return A.is_square and rank(A) == A.rows


def inverse(A: Matrix) -> Matrix:
    if not A.is_square:
        raise DimensionMismatch(f"inverse of non-square matrix {A.shape}")
    ech = rref(A)
    if len(ech.pivots) != A.rows:
        raise SingularMatrix(f"matrix of rank {len(ech.pivots)} < {A.rows} has no inverse")
    return ech.transform


def solve(A: Matrix, B: Matrix) -> Matrix:
    """Solve A·X = B for square nonsingular A."""
    return mat_mul(inverse(A), B)


def null_space(A: Matrix) -> list[tuple[Fraction, ...]]:
    """Basis of {x : A x = 0}, one vector per free column, read off the RREF."""
    ech = rref(A, track=False)
    n = A.cols
    pivset = set(ech.pivots)
    basis = []
    for f in range(n):
        if f in pivset:
            continue
        v = [ZERO] * n
        v[f] = ONE
        for i, c in enumerate(ech.pivots):
            v[c] = -ech.reduced[i, f]
        basis.append(tuple(v))
    return basis


def column_space(A: Matrix) -> list[tuple[Fraction, ...]]:
    """Basis of the column space: the pivot columns of A itself."""
    ech = rref(A, track=False)
    return [A.column(c) for c in ech.pivots]


@dataclass(frozen=True)
class RankNormalForm:
    """P·A·Q = [[I_r, 0], [0, 0]] with P, Q invertible."""
    P: Matrix
    Q: Matrix
    r: int


def rank_normal_form(A: Matrix) -> RankNormalForm:
    m, n = A.shape
    ech = rref(A)
    r = len(ech.pivots)
    pivots = list(ech.pivots)
    free = [j for j in range(n) if j not in set(pivots)]
    order = pivots + free
    # R·Π = [[I_r, F], [0, 0]]; right-multiplying by [[I, -F], [0, I]] clears F
    Qrows = [[ZERO] * n for _ in range(n)]
    for newcol, oldcol in enumerate(order):
        Qrows[oldcol][newcol] = ONE
    for k, fcol in enumerate(free):
        for i in range(r):
            f = ech.reduced[i, fcol]
            if f:
                # column (r + k) of Q gets -f times column i of Π
                Qrows[pivots[i]][r + k] -= f
    Q = Matrix._raw(tuple(tuple(x) for x in Qrows), n)
    return RankNormalForm(ech.transform, Q, r)


def rank_block(m: int, n: int, r: int) -> Matrix:
    """The m×n matrix [[I_r, 0], [0, 0]]."""
    return Matrix._raw(tuple(tuple(ONE if (i == j and i < r) else ZERO for j in range(n))
                             for i in range(m)), n)


def schur_one_inverse(A: Matrix, B: Matrix, C: Matrix, D: Matrix, Zminus: Matrix) -> Matrix:
    """{1}-inverse of [[A, B], [C, D]] built from the Schur complement of an
    invertible A.  When Z = D - C A^-1 B is invertible and Zminus = Z^-1 the
    result is the inverse of the block matrix."""
    n = A.rows
    m = D.rows
    Ainv = inverse(A)
    if Zminus.shape != (D.cols, D.rows):
        raise DimensionMismatch(f"Z^- must have shape {(D.cols, D.rows)}, got {Zminus.shape}")
    left = Matrix.block([[Matrix.identity(n), -(Ainv @ B)],
                         [Matrix.zeros(m, n), Matrix.identity(m)]])
    mid = Matrix.block_diag(Ainv, Zminus)
    right = Matrix.block([[Matrix.identity(n), Matrix.zeros(n, m)],
                          [-(C @ Ainv), Matrix.identity(m)]])
    return left @ mid @ right


def schur_complement(A: Matrix, B: Matrix, C: Matrix, D: Matrix) -> Matrix:
    return D - C @ inverse(A) @ B


# -- text and JSON forms --------------------------------------------------------


def format_entry(x: Fraction) -> str:
    return str(x)


def format_matrix(A: Matrix) -> str:
    lines = [f"{A.rows} {A.cols}"]
    if A.cols:
        widths = [max((len(str(A[i, j])) for i in range(A.rows)), default=1) for j in range(A.cols)]
        for r in A._data:
            lines.append(" ".join(str(x).rjust(w) for x, w in zip(r, widths)))
    return "\n".join(lines) + "\n"


def matrix_to_json(A: Matrix) -> dict:
    return {"rows": A.rows, "cols": A.cols, "entries": [[str(x) for x in r] for r in A._data]}


def matrix_from_json(obj) -> Matrix:
    try:
        rows, cols = int(obj["rows"]), int(obj["cols"])
        entries = obj["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MatrixParseError(f"bad JSON matrix object: {exc}") from exc
    if len(entries) != rows or any(len(r) != cols for r in entries):
        raise MatrixParseError(f"JSON entries do not match declared shape {rows}x{cols}")
    return Matrix((tuple(to_fraction(str(x)) for x in r) for r in entries), cols=cols)


def parse_matrix_lines(lines: Sequence[str], first_lineno: int = 1) -> Matrix:
    """Parse the text form: a "rows cols" header then one line per row.
    A matrix with zero columns has no row lines."""
    lines = [ln for ln in lines if ln.strip()]
    if not lines:
        raise MatrixParseError("empty matrix text")
    head = lines[0].split()
    if len(head) != 2:
        raise MatrixParseError(f"line {first_lineno}: header must be 'rows cols'")
    try:
        rows, cols = int(head[0]), int(head[1])
    except ValueError as exc:
        raise MatrixParseError(f"line {first_lineno}: non-integer shape") from exc
    if rows < 0 or cols < 0:
        raise MatrixParseError(f"line {first_lineno}: negative shape")
    body = lines[1:]
    expected = rows if cols else 0
    if len(body) != expected:
        raise MatrixParseError(f"expected {expected} row lines for a {rows}x{cols} matrix, got {len(body)}")
    data = []
    for k, ln in enumerate(body):
        toks = ln.split()
        if len(toks) != cols:
            raise MatrixParseError(f"row {k + 1}: expected {cols} entries, got {len(toks)}")
        data.append(tuple(to_fraction(t) for t in toks))
    if not cols:
        data = [()] * rows
    return Matrix(data, cols=cols)


def parse_matrix(text: str) -> Matrix:
    """Parse either the text form or the JSON object form."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise MatrixParseError(f"invalid JSON: {exc}") from exc
        return matrix_from_json(obj)
    return parse_matrix_lines(stripped.splitlines())


def split_blocks_text(text: str) -> list[list[str]]:
    chunks, cur = [], []
    for ln in text.splitlines():
        if ln.strip().startswith("#"):
            continue
        if ln.strip():
            cur.append(ln)
        elif cur:
            chunks.append(cur)
            cur = []
    if cur:
        chunks.append(cur)
    return chunks
