import random
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from drazinkit import gen
from drazinkit.antitri import Branch, assemble, classify_and_solve, group_bc_nonsingular
from drazinkit.errors import (DuplicateArc, InvalidPermutation, NonPositiveVector, NotBipartiteForPartition,
                              ParseError, UnequalParts, ZeroEntryVector, ZeroInnerProduct, ZeroWeight)
from drazinkit.exactmat import Matrix
from drazinkit.geninv import drazin
from drazinkit.digraph import (Digraph, StarFamily, adjacency, auto_bipartition, bipartite_blocks,
                               bipartite_order, digraph_from_matrix, double_star_blocks, linked_star_blocks,
                               parse_digraph, permutation_matrix, relabel, similarity_invariance_check)

DATA = Path(__file__).resolve().parent.parent / "data"
seeds = st.integers(0, 2 ** 32 - 1)


def rand_digraph(rng, nmax=6):
    n = rng.randint(1, nmax)
    return digraph_from_matrix(gen.rand_matrix(rng, n, n, zero_bias=rng.choice((0.3, 0.6, 0.8))))


def rand_perm(rng, n):
    p = list(range(1, n + 1))
    rng.shuffle(p)
    return p


# -- parsing -----------------------------------------------------------------------------


def test_parse_examples():
    g = parse_digraph("2\n1 2 1\n")
    assert g.n == 2 and g.arcs == ((1, 2, Fraction(1)),)
    g = parse_digraph("3\n1 2 1/2\n2 3 -3\n")
    assert g.weight(1, 2) == Fraction(1, 2) and g.weight(2, 3) == -3 and g.weight(3, 1) == 0


def test_parse_comments_and_bytes():
    g = parse_digraph(b"# header\n\n2\n# arc\n2 1 4\n")
    assert g.arcs == ((2, 1, Fraction(4)),)


@pytest.mark.parametrize("text, exc, line", [
    ("2\n1 2 1\n1 2 3\n", DuplicateArc, 3),
    ("2\n1 2 0\n", ZeroWeight, 2),
    ("2\n1 3 1\n", ParseError, 2),
    ("2\n1 2\n", ParseError, 2),
    ("x\n", ParseError, 1),
    ("2\n1 2 w\n", ParseError, 2),
    ("", ParseError, 1),
])
def test_parse_errors_carry_line_numbers(text, exc, line):
    with pytest.raises(exc) as info:
        parse_digraph(text)
    assert info.value.lineno == line


def test_text_round_trip():
    g = parse_digraph((DATA / "linked_star.txt").read_text())
    assert parse_digraph(g.to_text()) == g


# -- adjacency -------------------------------------------------------------------------


def test_adjacency_examples():
    assert adjacency(Digraph(3)) == Matrix.zeros(3)
    assert adjacency(Digraph(3, ((1, 1, "5/2"),))) == Matrix.diag(["5/2", 0, 0])
    cycle = Digraph(3, ((1, 2, 1), (2, 3, 1), (3, 1, 1)))
    assert adjacency(cycle) == Matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])


@settings(max_examples=40)
@given(seeds)
def test_matrix_round_trip(seed):
    rng = random.Random(seed)
    g = rand_digraph(rng)
    assert digraph_from_matrix(adjacency(g)) == g


# -- relabelling ----------------------------------------------------------------------


def test_permutation_matrix_convention():
    P = permutation_matrix([2, 3, 1])
    A = Matrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    B = P @ A @ P.T
    assert B[1, 2] == A[0, 1]
    with pytest.raises(InvalidPermutation):
        permutation_matrix([1, 1, 2])


def test_similarity_examples():
    cycle = Digraph(3, ((1, 2, 1), (2, 3, 1), (3, 1, 1)))
    assert similarity_invariance_check(cycle, [1, 2, 3])
    for perm in ([2, 3, 1], [3, 2, 1], [1, 3, 2]):
        assert similarity_invariance_check(cycle, perm)
    with pytest.raises(InvalidPermutation):
        relabel(cycle, [1, 2])


@settings(max_examples=60)
@given(seeds)
def test_similarity_invariance_random(seed):
    rng = random.Random(seed)
    g = rand_digraph(rng)
    perm = rand_perm(rng, g.n)
    assert similarity_invariance_check(g, perm)
    P = permutation_matrix(perm)
    A1 = adjacency(relabel(g, perm))
    assert oracles.drazin(A1) == P @ oracles.drazin(adjacency(g)) @ P.T


# -- bipartite ----------------------------------------------------------------------------


def test_bipartite_k2():
    g = Digraph(2, ((1, 2, 1), (2, 1, 1)))
    blk = bipartite_blocks(g, {1})
    assert blk.A == Matrix.zeros(1) and blk.B == Matrix([[1]]) and blk.C == Matrix([[1]])


def test_bipartite_rejections():
    g = Digraph(4, ((1, 2, 1), (1, 3, 1)))
    with pytest.raises(NotBipartiteForPartition):
        bipartite_blocks(g, {1, 2})
    with pytest.raises(UnequalParts):
        bipartite_blocks(g, {1})
    assert bipartite_blocks(g, {1}, require_equal=False).B.shape == (1, 3)
    with pytest.raises(NotBipartiteForPartition):
        auto_bipartition(Digraph(3, ((1, 2, 1), (2, 3, 1), (3, 1, 1))))


def test_bipartite_reassembly_with_rational_weights():
    g = Digraph(4, ((1, 2, "1/2"), (2, 3, -2), (3, 4, "3/2"), (4, 1, 5), (2, 1, 7)))
    left = auto_bipartition(g)
    blk = bipartite_blocks(g, left)
    order = bipartite_order(4, left)
    A = adjacency(g)
    assert assemble(blk) == Matrix([[A[i - 1, j - 1] for j in order] for i in order])


def _rand_bipartite(rng):
    k = rng.randint(1, 4)
    B = gen.rand_matrix(rng, k, k, zero_bias=rng.choice((0.3, 0.6)))
    C = gen.rand_matrix(rng, k, k, zero_bias=rng.choice((0.3, 0.6)))
    M = Matrix.block([[Matrix.zeros(k), B], [C, Matrix.zeros(k)]])
    g = digraph_from_matrix(M)
    perm = rand_perm(rng, 2 * k)
    return relabel(g, perm), {perm[i] for i in range(k)}


def test_bipartite_index_and_drazin_random():
    rng = random.Random(51)
    for _ in range(100):
        g, left = _rand_bipartite(rng)
        blk = bipartite_blocks(g, left)
        M = assemble(blk)
        W = blk.W
        iw = oracles.index(W)
        im = oracles.index(M)
        MD = oracles.drazin(M)
        CBD = drazin(blk.C @ blk.B).inverse
        WD = drazin(W).inverse
        k = blk.n
        O = Matrix.zeros(k)
        assert MD == Matrix.block([[O, blk.B @ CBD], [CBD @ blk.C, O]])
        assert MD == Matrix.block([[O, WD @ blk.B], [blk.C @ WD, O]])
        if iw == 0:
            assert im <= 1
            assert group_bc_nonsingular(blk).drazin == MD
        else:
            assert 2 * iw - 1 <= im <= 2 * iw + 1


@settings(max_examples=30)
@given(seeds)
def test_auto_bipartition_balances(seed):
    rng = random.Random(seed)
    g, _ = _rand_bipartite(rng)
    try:
        left = auto_bipartition(g)
    except UnequalParts:
        return
    assert len(left) * 2 == g.n
    bipartite_blocks(g, left)


# -- star families ------------------------------------------------------------------------


def test_linked_star_examples():
    blk = linked_star_blocks(StarFamily.linked([[1]], [[1]]))
    assert blk.W == Matrix([[1]])
    assert classify_and_solve(blk).index == 0
    blk = linked_star_blocks(StarFamily.linked([[1, 1], [1, 1]], [[1, 1], [1, 1]]))
    assert blk.W == Matrix.diag([2, 2])
    rep = classify_and_solve(blk)
    assert rep.branch is Branch.GROUP_INVERTIBLE and rep.index == 1


def test_linked_star_validation():
    with pytest.raises(NonPositiveVector):
        StarFamily.linked([[1, -1]], [[1, 1]])
    with pytest.raises(ValueError):
        StarFamily.linked([[1, 2]], [[1]])


def test_linked_star_data_file_matches_blocks():
    g = parse_digraph((DATA / "linked_star.txt").read_text())
    params = StarFamily.linked([[1, 2], [1, 1, "1/2"]], [[1, 1], [3, 1, 1]],
                               centers=Matrix([[0, 1], [0, 0]]))
    blk = linked_star_blocks(params)
    assert assemble(blk) == adjacency(g)
    rep = classify_and_solve(blk)
    assert rep.branch is Branch.GROUP_INVERTIBLE and rep.index == 1


def test_double_star_examples():
    rep = classify_and_solve(double_star_blocks(StarFamily.double(0, 0, [1, 2], [3, 1], [1, 1], [2, 2])))
    assert rep.branch is Branch.GROUP_INVERTIBLE and rep.index == 1
    blk = double_star_blocks(StarFamily.double(1, 2, [1, 1], [1, 1], [1, -1, 1], [1, -1, 1]))
    rep = group_bc_nonsingular(blk)
    M = assemble(blk)
    assert rep.index == 1 and oracles.index(M) == 1
    assert rep.drazin == oracles.drazin(M)
    D = rep.drazin
    assert M @ D @ M == M and D @ M @ D == D and M @ D == D @ M


def test_double_star_validation():
    with pytest.raises(ZeroInnerProduct):
        StarFamily.double(1, 1, [1, 1], [1, -1], [1], [1])
    with pytest.raises(ZeroEntryVector):
        StarFamily.double(1, 1, [1, 0], [1, 1], [1], [1])


@settings(max_examples=40)
@given(seeds)
def test_random_stars_are_group_invertible(seed):
    rng = random.Random(seed)
    pos = [Fraction(x) for x in (1, 2, 3)] + [Fraction(1, 2)]
    lens = [rng.randint(2, 3) for _ in range(rng.randint(1, 3))]
    xs = [[rng.choice(pos) for _ in range(L)] for L in lens]
    ys = [[rng.choice(pos) for _ in range(L)] for L in lens]
    rep = classify_and_solve(linked_star_blocks(StarFamily.linked(xs, ys)))
    assert rep.branch is Branch.GROUP_INVERTIBLE and rep.index == 1
    nz = [Fraction(x) for x in (-2, -1, 1, 2, 3)]
    while True:
        x, y = [rng.choice(nz) for _ in range(2)], [rng.choice(nz) for _ in range(2)]
        z, w = [rng.choice(nz) for _ in range(3)], [rng.choice(nz) for _ in range(3)]
        if sum(a * b for a, b in zip(x, y)) and sum(a * b for a, b in zip(z, w)):
            break
    blk = double_star_blocks(StarFamily.double(rng.choice(nz), rng.choice(nz), x, y, z, w))
    rep = classify_and_solve(blk)
    assert rep.branch is Branch.GROUP_INVERTIBLE and rep.index == 1
    assert rep.drazin == oracles.drazin(assemble(blk))
