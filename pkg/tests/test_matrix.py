import random
from itertools import combinations

import pytest

from lrckit.field import field_make
from lrckit.matrix import (DuplicatePoint, Mat, columns_independent,
                           mat_nullspace, mat_rank, mat_solve, rref,
                           vandermonde)


def random_matrix(gf, rows, cols, rng):
    return Mat(gf, [[rng.randrange(gf.q) for _ in range(cols)]
                    for _ in range(rows)])


def test_identity_rank():
    gf = field_make(7)
    assert mat_rank(Mat.identity(gf, 6)) == 6


def test_zero_matrix_nullspace():
    gf = field_make(2)
    N = mat_nullspace(Mat.zeros(gf, 2, 3))
    assert N.rows == 3 and mat_rank(N) == 3


def test_single_parity_nullspace_gf2():
    gf = field_make(2)
    M = Mat(gf, [[1, 1, 1]])
    N = mat_nullspace(M)
    assert N.rows == 2
    words = {tuple(r) for r in N.data}
    for w in words:
        assert sum(w) % 2 == 0


@pytest.mark.parametrize("q", [(2, 1), (2, 4), (3, 2), (7, 1)])
def test_rank_transpose_and_nullspace_randomized(q):
    gf = field_make(*q)
    rng = random.Random(99)
    for _ in range(25):
        M = random_matrix(gf, rng.randrange(1, 6), rng.randrange(1, 7), rng)
        r = mat_rank(M)
        assert r == mat_rank(M.transpose())
        N = mat_nullspace(M)
        assert N.rows == M.cols - r
        if N.rows:
            assert M.mul(N.transpose()).is_zero()
            assert mat_rank(N) == N.rows


def test_gf2_bitrows_path_consistency():
    gf2 = field_make(2)
    rng = random.Random(5)
    for _ in range(25):
        rows = [[rng.randrange(2) for _ in range(8)] for _ in range(5)]
        M = Mat(gf2, rows)
        R, pivots = rref(M)
        assert mat_rank(M) == len(pivots)
        # every original row lies in the row space of the rref rows
        for row in rows:
            aug = Mat(gf2, list(R.data) + [row])
            assert mat_rank(aug) == R.rows


def test_solve():
    gf = field_make(13)
    M = Mat(gf, [[1, 2, 3], [4, 5, 6]])
    x = mat_solve(M, (1, 2))
    assert x is not None
    assert list(M.mul_vec(x)) == [1, 2]
    # inconsistent system
    M2 = Mat(gf, [[1, 0], [1, 0]])
    assert mat_solve(M2, (0, 1)) is None


def test_vandermonde_all_ones_row():
    gf = field_make(7)
    V = vandermonde(gf, [1, 2, 3], 1)
    assert V.data == ((1, 1, 1),)


def test_vandermonde_minors_mds():
    gf = field_make(7)
    V = vandermonde(gf, [1, 2, 3, 4, 5, 6], 2)
    for cols in combinations(range(6), 2):
        assert columns_independent(V, cols)
    # nonsingular square case on k distinct points, k <= 6
    for k in range(2, 7):
        Vk = vandermonde(gf, list(range(k)), k)
        assert mat_rank(Vk) == k


def test_vandermonde_gf16_rank():
    gf = field_make(2, 4)
    pts = [gf.pow(gf.primitive, i) for i in range(9)]
    V = vandermonde(gf, pts, 5)
    assert mat_rank(V) == 5


def test_vandermonde_duplicate_point():
    gf = field_make(7)
    with pytest.raises(DuplicatePoint):
        vandermonde(gf, [1, 1, 2], 2)
