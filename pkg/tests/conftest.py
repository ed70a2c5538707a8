"""Shared generators and independent oracles for the test suite."""

from __future__ import annotations

from itertools import combinations, product

from latcount import HRepPolyhedron, IntMatrix
from latcount.intlinalg import orthogonal_vector, rank


def dp_knapsack_count(rows, b):
    """Dynamic-programming count of {x >= 0 integer : Ax = b}, A nonnegative."""
    k = len(b)
    states = list(product(*(range(x + 1) for x in b)))
    ways = {s: 0 for s in states}
    ways[tuple([0] * k)] = 1
    n = len(rows[0])
    for j in range(n):
        col = tuple(rows[i][j] for i in range(k))
        for s in states:
            prev = tuple(s[i] - col[i] for i in range(k))
            if all(p >= 0 for p in prev):
                ways[s] += ways[prev]
    return ways[tuple(b)]


def hrep_from_points(points):
    """Exact facet description of the full-dimensional conv(points)."""
    n = len(points[0])
    rows = {}
    for sub in combinations(range(len(points)), n):
        p0 = points[sub[0]]
        if n == 1:
            nu = (1,)
        else:
            dirs = IntMatrix(
                [[points[s][i] - p0[i] for s in sub[1:]] for i in range(n)],
                cols=n - 1,
            )
            nu = orthogonal_vector(dirs)
            if all(x == 0 for x in nu):
                continue
        c = sum(a * b for a, b in zip(nu, p0))
        vals = [sum(a * b for a, b in zip(nu, p)) for p in points]
        if all(v <= c for v in vals):
            rows[nu] = c
        if all(v >= c for v in vals):
            rows[tuple(-x for x in nu)] = -c
    return HRepPolyhedron.inequality(
        [list(r) for r in rows], [rows[r] for r in rows]
    )


def points_full_dim(points) -> bool:
    n = len(points[0])
    dirs = [
        [points[j][i] - points[0][i] for j in range(1, len(points))]
        for i in range(n)
    ]
    return rank(IntMatrix(dirs, cols=len(points) - 1)) == n


def enumerate_lattice_points(P: HRepPolyhedron, box):
    """All lattice points of P inside the box, by exhaustive scan."""
    A, b, n = P.A, P.b, P.n
    pts = []
    for cand in product(*(range(l, u + 1) for l, u in zip(box.lower, box.upper))):
        if P.form == "inequality":
            ok = all(
                sum(A[i, j] * cand[j] for j in range(n)) <= b[i]
                for i in range(A.rows)
            )
        else:
            ok = all(x >= 0 for x in cand) and all(
                sum(A[i, j] * cand[j] for j in range(n)) == b[i]
                for i in range(A.rows)
            )
        if ok:
            pts.append(cand)
    return pts
