"""Weighted digraphs, their adjacency matrices, and the bipartite and star families.

Edge-list text format::

    # comment lines and blank lines are ignored
    3          <- vertex count
    1 2 1/2    <- arc 1 -> 2 with weight 1/2
    2 3 -3

Entry (i, j) of the adjacency matrix is the weight of the arc i -> j.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .antitri import AntiTriangularBlocks
from .errors import (DuplicateArc, InvalidDigraph, InvalidPermutation, MatrixParseError,
                     NonPositiveVector, NotBipartiteForPartition, ParseError, UnequalParts,
                     ZeroEntryVector, ZeroInnerProduct, ZeroWeight)
from .exactmat import Matrix, to_fraction
from .geninv import drazin

Arc = tuple[int, int, Fraction]


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: tuple[Arc, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise InvalidDigraph(f"negative vertex count {self.n}")
        seen = set()
        arcs = []
        for pos, (i, j, w) in enumerate(self.arcs, start=1):
            w = to_fraction(w)
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise InvalidDigraph(f"arc #{pos} ({i}, {j}) has a vertex outside 1..{self.n}")
            if w == 0:
                raise ZeroWeight(pos, f"arc ({i}, {j}) has weight 0")
            if (i, j) in seen:
                raise DuplicateArc(pos, f"arc ({i}, {j}) given twice")
            seen.add((i, j))
            arcs.append((i, j, w))
        object.__setattr__(self, "arcs", tuple(arcs))

    def weight(self, i: int, j: int) -> Fraction:
        for a, b, w in self.arcs:
            if (a, b) == (i, j):
                return w
        return Fraction(0)

    def to_text(self) -> str:
        lines = [str(self.n)] + [f"{i} {j} {w}" for i, j, w in self.arcs]
        return "\n".join(lines) + "\n"


def parse_digraph(text: str | bytes) -> Digraph:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n = None
    arcs: list[Arc] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if n is None:
            if len(toks) != 1:
                raise ParseError(lineno, "first line must be the vertex count")
            try:
                n = int(toks[0])
            except ValueError:
                raise ParseError(lineno, f"vertex count {toks[0]!r} is not an integer") from None
            if n < 0:
                raise ParseError(lineno, "vertex count must be nonnegative")
            continue
        if len(toks) != 3:
            raise ParseError(lineno, f"expected 'i j w', got {len(toks)} fields")
        try:
            i, j = int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError(lineno, "vertex ids must be integers") from None
        if not (1 <= i <= n and 1 <= j <= n):
            raise ParseError(lineno, f"vertex id out of range 1..{n}")
        try:
            w = to_fraction(toks[2])
        except MatrixParseError:
            raise ParseError(lineno, f"weight {toks[2]!r} is not a rational literal") from None
        if w == 0:
            raise ZeroWeight(lineno, f"arc ({i}, {j}) has weight 0")
        if (i, j) in seen:
            raise DuplicateArc(lineno, f"arc ({i}, {j}) already given on line {seen[(i, j)]}")
        seen[(i, j)] = lineno
        arcs.append((i, j, w))
    if n is None:
        raise ParseError(1, "missing vertex count")
    return Digraph(n, tuple(arcs))


def adjacency(g: Digraph) -> Matrix:
    rows = [[0] * g.n for _ in range(g.n)]
    for i, j, w in g.arcs:
        rows[i - 1][j - 1] = w
    return Matrix(rows, cols=g.n)


def digraph_from_matrix(A: Matrix) -> Digraph:
    """The weighted digraph whose adjacency matrix is A."""
    if not A.is_square:
        raise InvalidDigraph(f"adjacency matrix must be square, got {A.shape}")
    arcs = [(i + 1, j + 1, A[i, j]) for i in range(A.rows) for j in range(A.cols) if A[i, j]]
    return Digraph(A.rows, tuple(arcs))


# -- relabelling ---------------------------------------------------------------------


def _check_perm(perm: Sequence[int], n: int) -> tuple[int, ...]:
    perm = tuple(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise InvalidPermutation(f"{list(perm)} is not a permutation of 1..{n}")
    return perm


def permutation_matrix(perm: Sequence[int]) -> Matrix:
    """P with P e_i = e_perm(i), so (P A P^-1)[perm(i), perm(j)] = A[i, j]."""
    n = len(perm)
    perm = _check_perm(perm, n)
    rows = [[0] * n for _ in range(n)]
    for i, p in enumerate(perm):
        rows[p - 1][i] = 1
    return Matrix(rows, cols=n)


def relabel(g: Digraph, perm: Sequence[int]) -> Digraph:
    perm = _check_perm(perm, g.n)
    return Digraph(g.n, tuple(sorted((perm[i - 1], perm[j - 1], w) for i, j, w in g.arcs)))


def similarity_invariance_check(g: Digraph, perm: Sequence[int]) -> bool:
    """Relabelling vertices keeps the index and conjugates the Drazin inverse."""
    P = permutation_matrix(_check_perm(perm, g.n))
    Pinv = P.T
    A = adjacency(g)
    A1 = adjacency(relabel(g, perm))
    if A1 != P @ A @ Pinv:
        return False
    d, d1 = drazin(A), drazin(A1)
    return d.index == d1.index and d1.inverse == P @ d.inverse @ Pinv


# -- bipartite digraphs -------------------------------------------------------------


def bipartite_order(n: int, left: Iterable[int]) -> list[int]:
    left = sorted(set(left))
    right = [v for v in range(1, n + 1) if v not in left]
    return left + right


def bipartite_blocks(g: Digraph, left: Iterable[int], require_equal: bool = True) -> AntiTriangularBlocks:
    """A = 0, B and C read off with the left part first, each part in ascending id order."""
    left = set(left)
    if not left <= set(range(1, g.n + 1)):
        raise NotBipartiteForPartition(f"left part {sorted(left)} is not a subset of 1..{g.n}")
    right = set(range(1, g.n + 1)) - left
    if require_equal and len(left) != len(right):
        raise UnequalParts(f"parts have sizes {len(left)} and {len(right)}")
    for i, j, _ in g.arcs:
        if (i in left) == (j in left):
            raise NotBipartiteForPartition(f"arc ({i}, {j}) stays inside one part")
    order = bipartite_order(g.n, left)
    k = len(left)
    A = adjacency(g)
    M = Matrix([[A[i - 1, j - 1] for j in order] for i in order], cols=g.n)
    return AntiTriangularBlocks(M.submatrix(0, k, 0, k), M.submatrix(0, k, k, g.n),
                                M.submatrix(k, g.n, 0, k))


def auto_bipartition(g: Digraph, require_equal: bool = True) -> set[int]:
    """Left part of a 2-colouring of the underlying undirected graph.

    Each connected component may be coloured either way round; when equal
    parts are required, the orientations are chosen so the parts balance.
    """
    adj: dict[int, set[int]] = {v: set() for v in range(1, g.n + 1)}
    for i, j, _ in g.arcs:
        if i == j:
            raise NotBipartiteForPartition(f"loop at vertex {i}")
        adj[i].add(j)
        adj[j].add(i)
    colour: dict[int, int] = {}
    comps: list[tuple[set[int], set[int]]] = []
    for s in range(1, g.n + 1):
        if s in colour:
            continue
        colour[s] = 0
        parts = (set([s]), set())
        stack = [s]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in colour:
                    colour[u] = 1 - colour[v]
                    parts[colour[u]].add(u)
                    stack.append(u)
                elif colour[u] == colour[v]:
                    raise NotBipartiteForPartition(f"odd cycle through vertices {v} and {u}")
        comps.append(parts)
    if not require_equal:
        return set().union(*(p[0] for p in comps)) if comps else set()
    if g.n % 2:
        raise UnequalParts(f"{g.n} vertices cannot split into equal parts")
    # subset-sum over component orientations
    reach: dict[int, list[int]] = {0: []}
    for idx, (p0, p1) in enumerate(comps):
        nxt: dict[int, list[int]] = {}
        for size, picks in reach.items():
            for side, part in ((0, p0), (1, p1)):
                nxt.setdefault(size + len(part), picks + [side])
        reach = nxt
    if g.n // 2 not in reach:
        raise UnequalParts("no 2-colouring has equal parts")
    picks = reach[g.n // 2]
    return set().union(*(comps[i][side] for i, side in enumerate(picks))) if comps else set()


# -- star families ------------------------------------------------------------------


def _vec(v) -> tuple[Fraction, ...]:
    return tuple(to_fraction(x) for x in v)


def _dot(x, y) -> Fraction:
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


@dataclass(frozen=True)
class StarFamily:
    """Parameters of a linked-star or double-star digraph.

    LinkedStar: vectors xs[i], ys[i] (equal lengths per i) and an optional
    n×n centre matrix (zero by default).  DoubleStar: scalars a, b and
    vectors x, y (equal length) and z, w (equal length).
    """
    kind: str
    xs: tuple = ()
    ys: tuple = ()
    centers: Matrix | None = None
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    x: tuple = ()
    y: tuple = ()
    z: tuple = ()
    w: tuple = ()

    @classmethod
    def linked(cls, xs, ys, centers: Matrix | None = None) -> "StarFamily":
        xs = tuple(_vec(v) for v in xs)
        ys = tuple(_vec(v) for v in ys)
        if len(xs) != len(ys):
            raise ValueError(f"{len(xs)} x-vectors but {len(ys)} y-vectors")
        for i, (x, y) in enumerate(zip(xs, ys), start=1):
            if len(x) != len(y) or not x:
                raise ValueError(f"star {i}: x and y must be nonempty of equal length")
            if any(t <= 0 for t in x + y):
                raise NonPositiveVector(f"star {i}: vectors must be strictly positive")
        if centers is not None and centers.shape != (len(xs), len(xs)):
            raise ValueError(f"centre matrix must be {len(xs)}x{len(xs)}")
        return cls("LinkedStar", xs=xs, ys=ys, centers=centers)

    @classmethod
    def double(cls, a, b, x, y, z, w) -> "StarFamily":
        x, y, z, w = _vec(x), _vec(y), _vec(z), _vec(w)
        if len(x) != len(y) or len(z) != len(w) or not x or not z:
            raise ValueError("need len(x) == len(y) and len(z) == len(w), all nonempty")
        if any(t == 0 for t in x + y + z + w):
            raise ZeroEntryVector("double-star vectors must have all entries nonzero")
        if _dot(x, y) == 0 or _dot(z, w) == 0:
            raise ZeroInnerProduct(f"x.y = {_dot(x, y)}, z.w = {_dot(z, w)}; both must be nonzero")
        return cls("DoubleStar", a=to_fraction(a), b=to_fraction(b), x=x, y=y, z=z, w=w)


def _row_block_diag(vectors) -> Matrix:
    """diag(v_1^T, ..., v_n^T): n × (sum of lengths)."""
    total = sum(len(v) for v in vectors)
    rows, off = [], 0
    for v in vectors:
        r = [0] * total
        r[off:off + len(v)] = v
        rows.append(r)
        off += len(v)
    return Matrix(rows, cols=total)


def linked_star_blocks(params: StarFamily) -> AntiTriangularBlocks:
    """B = diag(x_1^T, ..., x_n^T), C = diag(y_1, ..., y_n); BC = diag(x_i^T y_i)."""
    if params.kind != "LinkedStar":
        raise ValueError(f"expected LinkedStar parameters, got {params.kind}")
    n = len(params.xs)
    A = params.centers if params.centers is not None else Matrix.zeros(n)
    B = _row_block_diag(params.xs)
    C = _row_block_diag(params.ys).T
    return AntiTriangularBlocks(A, B, C)


def double_star_blocks(params: StarFamily) -> AntiTriangularBlocks:
    """A = [[0, a], [b, 0]], B = diag(x^T, z^T), C = diag(y, w); BC = diag(x.y, z.w)."""
    if params.kind != "DoubleStar":
        raise ValueError(f"expected DoubleStar parameters, got {params.kind}")
    A = Matrix([[0, params.a], [params.b, 0]])
    B = _row_block_diag([params.x, params.z])
    C = _row_block_diag([params.y, params.w]).T
    return AntiTriangularBlocks(A, B, C)
