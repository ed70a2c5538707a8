"""Polyhedron representations, vertex enumeration and form transforms.

Polyhedra come in two flavours: inequality form {x : Ax <= b} with
rank(A) = n, and standard form {x >= 0 : Ax = b} with rank(A) = k.
All tests are exact; rational points are tuples of Fractions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations

from .errors import Infeasible, RankDeficient
from .intlinalg import (
    IntMatrix,
    det,
    orthogonal_vector,
    rank,
    row_hnf,
    snf,
    solve_square,
    unimodular_inverse,
)


@dataclass(frozen=True)
class HRepPolyhedron:
    form: str  # "inequality" or "standard"
    A: IntMatrix
    b: tuple

    def __post_init__(self):
        if self.form not in ("inequality", "standard"):
            raise ValueError(f"unknown form {self.form!r}")
        if len(self.b) != self.A.rows:
            raise ValueError("right-hand side length does not match row count")
        if not all(isinstance(x, int) for x in self.b):
            raise TypeError("right-hand side must be integral")

    @property
    def n(self) -> int:
        return self.A.cols

    @staticmethod
    def inequality(rows, b) -> "HRepPolyhedron":
        return HRepPolyhedron("inequality", IntMatrix(rows), tuple(int(x) for x in b))

    @staticmethod
    def standard(rows, b) -> "HRepPolyhedron":
        return HRepPolyhedron("standard", IntMatrix(rows), tuple(int(x) for x in b))


@dataclass(frozen=True)
class VertexInfo:
    """A vertex together with its full set of tight row indices."""

    v: tuple
    active: tuple


@dataclass(frozen=True)
class StandardTransform:
    """Integer parametrization x = r + B z of {x in Z^n : Ax = b}.

    The image polyhedron {z : A_hat z <= b_hat} with A_hat = -B and
    b_hat = r is in bijection with {x in Z^n_+ : Ax = b} via that map.
    """

    A_hat: IntMatrix
    b_hat: tuple
    B: IntMatrix
    r: tuple

    @property
    def d(self) -> int:
        return self.B.cols


class Classification(Enum):
    EMPTY = "empty"
    HAS_LINE = "has_line"
    POINTED = "pointed"


def _feasible(rows) -> bool:
    """Exact Fourier-Motzkin feasibility for a list of (coeffs, rhs) with <=."""
    work = []
    for coeffs, beta in rows:
        work.append((tuple(Fraction(c) for c in coeffs), Fraction(beta)))
    nvars = len(work[0][0]) if work else 0
    for var in range(nvars):
        pos, neg, rest = [], [], []
        for coeffs, beta in work:
            c = coeffs[var]
            if c > 0:
                pos.append((coeffs, beta))
            elif c < 0:
                neg.append((coeffs, beta))
            else:
                rest.append((coeffs, beta))
        new = rest
        for cp, bp in pos:
            for cn, bn in neg:
                lam_p = -cn[var]
                lam_n = cp[var]
                coeffs = tuple(lam_p * a + lam_n * b for a, b in zip(cp, cn))
                beta = lam_p * bp + lam_n * bn
                new.append((coeffs, beta))
        # normalize and deduplicate to keep growth in check
        seen = {}
        for coeffs, beta in new:
            denoms = [x.denominator for x in coeffs] + [beta.denominator]
            scale = Fraction(math.lcm(*denoms))
            ints = [int(x * scale) for x in coeffs] + [int(beta * scale)]
            g = math.gcd(*(abs(x) for x in ints))
            if g > 1:
                ints = [x // g for x in ints]
            key = tuple(ints[:-1])
            rhs = Fraction(ints[-1])
            if key in seen:
                seen[key] = min(seen[key], rhs)
            else:
                seen[key] = rhs
        work = [
            (tuple(Fraction(c) for c in key), rhs) for key, rhs in seen.items()
        ]
        if any(all(c == 0 for c in key) and rhs < 0 for key, rhs in work):
            return False
    return all(beta >= 0 for _, beta in work)


def _ineq_rows(P: HRepPolyhedron):
    """P as a plain list of <= rows, whatever its form."""
    rows = []
    if P.form == "inequality":
        for i in range(P.A.rows):
            rows.append((P.A.row(i), P.b[i]))
    else:
        for i in range(P.A.rows):
            rows.append((P.A.row(i), P.b[i]))
            rows.append((tuple(-x for x in P.A.row(i)), -P.b[i]))
        n = P.n
        for j in range(n):
            rows.append((tuple(-1 if t == j else 0 for t in range(n)), 0))
    return rows


def classify(P: HRepPolyhedron) -> Classification:
    """Empty / contains-a-line / pointed, decided by exact feasibility tests."""
    if not _feasible(_ineq_rows(P)):
        return Classification.EMPTY
    if P.form == "standard":
        return Classification.POINTED
    if rank(P.A) < P.n:
        return Classification.HAS_LINE
    return Classification.POINTED


def vertices(P: HRepPolyhedron):
    """All vertices of an inequality-form polyhedron, by basis enumeration.

    Each geometric vertex is reported once, carrying every tight row index.
    The list is sorted by coordinates for determinism.
    """
    if P.form != "inequality":
        raise ValueError("vertex enumeration expects inequality form")
    A, b, n = P.A, P.b, P.n
    if rank(A) < n:
        raise RankDeficient("inequality form needs full column rank")
    found = {}
    for subset in combinations(range(A.rows), n):
        sub = A.take_rows(subset)
        v = solve_square(sub, [b[i] for i in subset])
        if v is None:
            continue
        if v in found:
            continue
        sat = True
        for i in range(A.rows):
            lhs = sum(A[i, j] * v[j] for j in range(n))
            if lhs > b[i]:
                sat = False
                break
        if not sat:
            continue
        active = tuple(
            i
            for i in range(A.rows)
            if sum(A[i, j] * v[j] for j in range(n)) == b[i]
        )
        found[v] = VertexInfo(v=v, active=active)
    return [found[v] for v in sorted(found)]


def recession_rays(P: HRepPolyhedron):
    """Extreme rays of {y : Ay <= 0} as primitive integer vectors.

    Assumes rank(A) = n, so the recession cone is pointed and every extreme
    ray is determined by n-1 active rows.
    """
    if P.form != "inequality":
        raise ValueError("recession rays expect inequality form")
    A, n = P.A, P.n
    rays = set()
    for subset in combinations(range(A.rows), n - 1):
        if n == 1:
            y = (1,)
        else:
            y = orthogonal_vector(A.take_rows(subset).transpose())
            if all(x == 0 for x in y):
                continue
        for cand in (y, tuple(-x for x in y)):
            if all(
                sum(A[i, j] * cand[j] for j in range(n)) <= 0 for i in range(A.rows)
            ):
                rays.add(cand)
    return sorted(rays)


def is_bounded(P: HRepPolyhedron) -> bool:
    if P.form == "inequality":
        return not recession_rays(P)
    # standard form: recession cone is {x >= 0 : Ax = 0}
    n = P.n
    rows = []
    for i in range(P.A.rows):
        rows.append((P.A.row(i), 0))
        rows.append((tuple(-x for x in P.A.row(i)), 0))
    for j in range(n):
        rows.append((tuple(-1 if t == j else 0 for t in range(n)), 0))
    ones = tuple(1 for _ in range(n))
    rows.append((ones, 1))
    rows.append((tuple(-x for x in ones), -1))
    return not _feasible(rows)


def dimension(P: HRepPolyhedron) -> int:
    """Affine dimension of a nonempty pointed inequality-form polyhedron."""
    verts = vertices(P)
    if not verts:
        raise ValueError("dimension needs a nonempty polyhedron with vertices")
    rays = recession_rays(P)
    v0 = verts[0].v
    dirs = []
    for w in verts[1:]:
        denoms = [x.denominator for x in w.v] + [x.denominator for x in v0]
        scale = math.lcm(*denoms)
        dirs.append([int((w.v[j] - v0[j]) * scale) for j in range(P.n)])
    dirs.extend([list(r) for r in rays])
    if not dirs:
        return 0
    return rank(IntMatrix([[row[j] for row in dirs] for j in range(P.n)], cols=len(dirs)))


def normalize_standard(A: IntMatrix, b):
    """Rescale a standard-form system so the gcd of its k-minors is 1.

    Multiplies Ax = b through by the inverse of the left SNF factor; the
    integer solution set is unchanged. Raises Infeasible when the
    transformed right-hand side is non-integral (no integer solutions).
    """
    b = tuple(int(x) for x in b)
    k = A.rows
    if rank(A) < k:
        raise RankDeficient("standard form needs full row rank")
    res = snf(A)
    pinv = unimodular_inverse(res.P)
    y = pinv.mul_vec(b)
    bprime = []
    for i in range(k):
        s = res.S[i]
        if y[i] % s != 0:
            raise Infeasible("no integer solution: SNF back-substitution fails")
        bprime.append(y[i] // s)
    aprime = res.Q.take_rows(range(k))
    return aprime, tuple(bprime)


def standard_to_inequality(A: IntMatrix, b) -> StandardTransform:
    """Parametrize {x in Z^n : Ax = b} as r + B Z^(n-k) and package the
    inequality system over the parameter space.

    Requires rank(A) = k and gcd of k-minors equal to 1. Raises Infeasible
    when Ax = b has no integer solution.
    """
    b = tuple(int(x) for x in b)
    k, n = A.rows, A.cols
    res = snf(A)
    if len(res.S) < k:
        raise RankDeficient("standard form needs full row rank")
    # the product of invariant factors equals the gcd of the k-minors
    if math.prod(res.S) != 1:
        raise ValueError("system must be normalized first (gcd of k-minors is not 1)")
    h, q = row_hnf(A)
    y = solve_square(h, b)
    if y is None:
        raise RankDeficient("triangular factor unexpectedly singular")
    if any(x.denominator != 1 for x in y):
        raise Infeasible("no integer solution: HNF back-substitution fails")
    y = [int(x) for x in y]
    bmat = q.take_columns(range(k, n))
    r = tuple(q.take_columns(range(k)).mul_vec(y))
    return StandardTransform(A_hat=-bmat, b_hat=r, B=bmat, r=r)


def feasible_cone_polar_generators(P: HRepPolyhedron, vinfo: VertexInfo) -> IntMatrix:
    """Generators (as columns) of the polar of the feasible cone at a vertex."""
    return P.A.take_rows(vinfo.active).transpose()


def vertex_points(P: HRepPolyhedron):
    """Vertices of either form as rational points.

    Standard form vertices are the basic feasible solutions: k basic
    coordinates solve A_S x_S = b, the rest are zero.
    """
    if P.form == "inequality":
        return [vi.v for vi in vertices(P)]
    A, b, k, n = P.A, P.b, P.A.rows, P.n
    found = set()
    for subset in combinations(range(n), k):
        sub = A.take_columns(subset)
        xs = solve_square(sub, b)
        if xs is None or any(x < 0 for x in xs):
            continue
        point = [Fraction(0)] * n
        for pos, j in enumerate(subset):
            point[j] = xs[pos]
        found.add(tuple(point))
    return sorted(found)
