import math
import random

import pytest

from latcount.errors import NotUnimodular, RankDeficient
from latcount.intlinalg import (
    IntMatrix,
    adjugate,
    delta_stats,
    det,
    hnf,
    rank,
    row_hnf,
    snf,
    solve_square,
    unimodular_inverse,
)


def test_det_examples():
    assert det(IntMatrix([[2, 0], [0, 3]])) == 6
    assert det(IntMatrix([[1]])) == 1
    assert det(IntMatrix([[3, 1], [1, 2]])) == 5


def test_det_singular_and_sign():
    assert det(IntMatrix([[1, 2], [2, 4]])) == 0
    assert det(IntMatrix([[0, 1], [1, 0]])) == -1


def test_adjugate_examples():
    assert adjugate(IntMatrix.identity(3)) == IntMatrix.identity(3)
    assert adjugate(IntMatrix([[2, 1], [1, 1]])) == IntMatrix([[1, -1], [-1, 2]])
    assert adjugate(IntMatrix([[2, 0], [0, 3]])) == IntMatrix([[3, 0], [0, 2]])


def test_hnf_identity():
    res = hnf(IntMatrix.identity(2))
    assert res.H == IntMatrix.identity(2)
    assert res.Q == IntMatrix.identity(2)
    assert res.B.rows == 0


def test_hnf_already_normal():
    res = hnf(IntMatrix([[2, 0], [0, 1]]))
    assert res.H == IntMatrix([[2, 0], [0, 1]])
    assert res.Q == IntMatrix.identity(2)


def test_hnf_column_reduction():
    a = IntMatrix([[2, 2], [0, 1]])
    res = hnf(a)
    assert res.H == IntMatrix([[2, 0], [0, 1]])
    assert abs(det(res.Q)) == 1
    assert res.H.vstack(res.B) @ res.Q == a


def test_hnf_rank_deficient():
    with pytest.raises(RankDeficient):
        hnf(IntMatrix([[1, 2], [2, 4], [3, 6]]))


def test_snf_examples():
    assert snf(IntMatrix([[2, 0], [0, 3]])).S == (1, 6)
    assert snf(IntMatrix([[2, 0], [0, 2]])).S == (2, 2)
    assert snf(IntMatrix([[4, 6]])).S == (2,)


def test_snf_reconstruction():
    a = IntMatrix([[4, 6], [2, 8]])
    res = snf(a)
    assert res.P @ res.diagonal_matrix(2, 2) @ res.Q == a


def test_delta_stats_examples():
    s = delta_stats(IntMatrix([[1, 0], [0, 1], [1, 1]]), 2)
    assert (s.delta_max, s.delta_gcd, s.delta_lcm) == (1, 1, 1)
    s = delta_stats(IntMatrix([[1, 2], [3, 4]]), 2)
    assert (s.delta_max, s.delta_gcd, s.delta_lcm) == (2, 2, 2)
    s = delta_stats(IntMatrix([[1, 2], [3, 4]]), 1)
    assert (s.delta_max, s.delta_gcd, s.delta_lcm) == (4, 1, 12)


def test_unimodular_inverse_rejects():
    with pytest.raises(NotUnimodular):
        unimodular_inverse(IntMatrix([[2, 0], [0, 1]]))


def test_row_hnf_wide():
    a = IntMatrix([[1, 2], [0, 3]])
    h, q = row_hnf(IntMatrix([[2, 4, 6]]))
    assert h.tolists() == [[2]]
    prod = IntMatrix([[2, 4, 6]]) @ q
    assert prod.tolists() == [[2, 0, 0]]


def test_solve_square():
    x = solve_square(IntMatrix([[2, 1], [1, 1]]), [3, 2])
    assert x == (1, 1)
    assert solve_square(IntMatrix([[1, 1], [1, 1]]), [1, 2]) is None


def test_normal_form_properties_random():
    rng = random.Random(2024)
    for _ in range(120):
        m = rng.randint(1, 5)
        n = rng.randint(1, m)
        a = IntMatrix([[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)])

        res = snf(a)
        r = len(res.S)
        assert r == rank(a)
        assert res.P @ res.diagonal_matrix(m, n) @ res.Q == a
        assert abs(det(res.P)) == 1 and abs(det(res.Q)) == 1
        assert all(s > 0 for s in res.S)
        for i in range(r - 1):
            assert res.S[i + 1] % res.S[i] == 0
        prodsofar = 1
        for k in range(1, r + 1):
            prodsofar *= res.S[k - 1]
            assert prodsofar == delta_stats(a, k).delta_gcd

        if n <= m and det(a.take_rows(range(n))) != 0:
            h = hnf(a)
            stacked = h.H.vstack(h.B)
            assert stacked @ h.Q == a
            assert abs(det(h.Q)) == 1
            for i in range(n):
                assert h.H[i, i] > 0
                for j in range(n):
                    if j > i:
                        assert h.H[i, j] == 0
                    elif j < i:
                        assert 0 <= h.H[i, j] < h.H[i, i]
            assert stacked.max_abs() <= delta_stats(a, n).delta_max


def test_adjugate_identity_random():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(1, 5)
        a = IntMatrix([[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)])
        d = det(a)
        prod = a @ adjugate(a)
        expect = IntMatrix([[d if i == j else 0 for j in range(n)] for i in range(n)])
        assert prod == expect
