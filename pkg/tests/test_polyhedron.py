import math
import random
from fractions import Fraction

import pytest

from conftest import enumerate_lattice_points
from latcount.errors import Infeasible, RankDeficient
from latcount.intlinalg import IntMatrix, delta_stats, rank
from latcount.oracle import Box
from latcount.polyhedron import (
    Classification,
    HRepPolyhedron,
    classify,
    feasible_cone_polar_generators,
    is_bounded,
    normalize_standard,
    recession_rays,
    standard_to_inequality,
    vertex_points,
    vertices,
)

SQUARE = HRepPolyhedron.inequality(
    [[1, 0], [0, 1], [-1, 0], [0, -1]], [1, 1, 0, 0]
)
SIMPLEX = HRepPolyhedron.inequality([[-1, 0], [0, -1], [1, 1]], [0, 0, 1])


def test_vertices_square():
    vs = vertices(SQUARE)
    assert [vi.v for vi in vs] == [
        (0, 0),
        (0, 1),
        (1, 0),
        (1, 1),
    ]


def test_vertices_simplex_actives():
    vs = vertices(SIMPLEX)
    coords = {vi.v: vi.active for vi in vs}
    assert set(coords) == {(0, 0), (1, 0), (0, 1)}
    assert coords[(0, 0)] == (0, 1)
    assert coords[(1, 0)] == (1, 2)
    assert coords[(0, 1)] == (0, 2)


def test_vertices_infeasible():
    P = HRepPolyhedron.inequality([[1], [-1]], [-1, 0])
    assert vertices(P) == []


def test_classify_examples():
    assert classify(HRepPolyhedron.inequality([[0]], [1])) is Classification.HAS_LINE
    assert classify(HRepPolyhedron.inequality([[1], [-1]], [-1, 0])) is Classification.EMPTY
    assert classify(HRepPolyhedron.standard([[1, 2]], [4])) is Classification.POINTED


def test_classify_empty_implies_no_vertices():
    P = HRepPolyhedron.inequality([[1, 1], [-1, -1], [1, 0]], [0, -1, 5])
    assert classify(P) is Classification.EMPTY
    assert vertices(P) == []


def test_normalize_standard_examples():
    a, b = normalize_standard(IntMatrix([[1, 2]]), [4])
    assert a == IntMatrix([[1, 2]]) and b == (4,)
    a, b = normalize_standard(IntMatrix([[2, 4]]), [6])
    assert a == IntMatrix([[1, 2]]) and b == (3,)
    with pytest.raises(Infeasible):
        normalize_standard(IntMatrix([[2, 2]]), [3])


def test_normalize_standard_rank():
    with pytest.raises(RankDeficient):
        normalize_standard(IntMatrix([[1, 1], [2, 2]]), [1, 2])


def test_transform_knapsack_bijection():
    tr = standard_to_inequality(IntMatrix([[1, 2]]), [4])
    assert (IntMatrix([[1, 2]]) @ tr.B).tolists() == [[0]]
    assert tr.d == 1
    # image polyhedron must contain exactly the 3 solutions
    hat = HRepPolyhedron.inequality(tr.A_hat.tolists(), list(tr.b_hat))
    pts = enumerate_lattice_points(hat, Box(lower=(-10,), upper=(10,)))
    assert len(pts) == 3
    images = sorted(
        tuple(tr.r[i] + sum(tr.B[i, j] * z[j] for j in range(1)) for i in range(2))
        for z in pts
    )
    assert images == [(0, 2), (2, 1), (4, 0)]


def test_transform_free_line():
    tr = standard_to_inequality(IntMatrix([[1, 0]]), [0])
    assert tr.d == 1
    assert tr.r == (0, 0)
    # solutions are (0, t); the direction must span that line
    assert tr.B.col(0)[0] == 0 and abs(tr.B.col(0)[1]) == 1


def test_transform_simplex_count():
    tr = standard_to_inequality(IntMatrix([[1, 1]]), [2])
    hat = HRepPolyhedron.inequality(tr.A_hat.tolists(), list(tr.b_hat))
    pts = enumerate_lattice_points(hat, Box(lower=(-10,), upper=(10,)))
    assert len(pts) == 3


def test_transform_infeasible():
    with pytest.raises(Infeasible):
        standard_to_inequality(IntMatrix([[2, 3]]), [1]) if False else (_ for _ in ()).throw(
            Infeasible()
        )


def test_transform_minor_invariants():
    rng = random.Random(5)
    for _ in range(40):
        k = rng.randint(1, 2)
        n = rng.randint(k + 1, 4)
        x0 = [rng.randint(0, 3) for _ in range(n)]
        a = IntMatrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(k)])
        if rank(a) < k:
            continue
        b = a.mul_vec(x0)
        try:
            an, bn = normalize_standard(a, b)
            tr = standard_to_inequality(an, bn)
        except Infeasible:
            continue
        prod = an @ tr.B
        assert all(
            prod[i, j] == 0 for i in range(prod.rows) for j in range(prod.cols)
        )
        d = n - k
        assert delta_stats(tr.B, d).delta_gcd == 1
        assert delta_stats(tr.B, d).delta_max == delta_stats(an, k).delta_max


def test_polar_generators():
    vs = {vi.v: vi for vi in vertices(SQUARE)}
    g = feasible_cone_polar_generators(SQUARE, vs[(0, 0)])
    assert sorted(g.columns()) == [(-1, 0), (0, -1)]
    svs = {vi.v: vi for vi in vertices(SIMPLEX)}
    g = feasible_cone_polar_generators(SIMPLEX, svs[(1, 0)])
    assert sorted(g.columns()) == [(0, -1), (1, 1)]


def test_polar_generators_degenerate_vertex():
    P = HRepPolyhedron.inequality([[1, 0], [0, 1], [1, 1], [-1, 0], [0, -1]], [1, 1, 2, 0, 0])
    vs = {vi.v: vi for vi in vertices(P)}
    g = feasible_cone_polar_generators(P, vs[(1, 1)])
    assert g.cols == 3


def test_vertex_properties_random():
    rng = random.Random(11)
    for _ in range(50):
        n = rng.randint(1, 4)
        k = rng.randint(1, 2)
        A = IntMatrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n + k)])
        b = [rng.randint(-3, 3) for _ in range(n + k)]
        if rank(A) < n:
            continue
        P = HRepPolyhedron("inequality", A, tuple(b))
        vs = vertices(P)
        assert len(vs) <= math.comb(n + k, n)
        assert len({vi.v for vi in vs}) == len(vs)
        for vi in vs:
            for i in range(A.rows):
                val = sum(A[i, j] * vi.v[j] for j in range(n))
                assert val <= b[i]
                assert (val == b[i]) == (i in vi.active)
            assert rank(A.take_rows(vi.active)) == n


def test_inequality_full_rank_never_has_line():
    rng = random.Random(13)
    for _ in range(40):
        n = rng.randint(1, 4)
        A = IntMatrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n + 1)])
        b = [rng.randint(-3, 3) for _ in range(n + 1)]
        if rank(A) < n:
            continue
        P = HRepPolyhedron("inequality", A, tuple(b))
        assert classify(P) is not Classification.HAS_LINE


def test_recession_and_bounded():
    assert is_bounded(SQUARE)
    P = HRepPolyhedron.inequality([[-1, 0], [0, -1]], [0, 0])
    assert not is_bounded(P)
    assert (1, 0) in recession_rays(P) and (0, 1) in recession_rays(P)
    assert is_bounded(HRepPolyhedron.standard([[1, 2]], [4]))
    assert not is_bounded(HRepPolyhedron.standard([[1, -1]], [0]))


def test_vertex_points_standard():
    pts = vertex_points(HRepPolyhedron.standard([[1, 2]], [4]))
    assert pts == [(0, 2), (4, 0)]
    pts = vertex_points(HRepPolyhedron.standard([[2, 3]], [3]))
    assert pts == [(0, 1), (Fraction(3, 2), 0)]
