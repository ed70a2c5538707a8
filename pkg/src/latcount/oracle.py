"""Brute-force ground truth used by the test suites.

Everything here is intentionally naive: exhaustive box scans with exact
membership tests, and randomized indicator-identity checks for signed
cone decompositions.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from .errors import Unbounded
from .intlinalg import IntMatrix, adjugate, det, orthogonal_vector
from .polyhedron import HRepPolyhedron, is_bounded, vertex_points

SCAN_CAP = 10**7


@dataclass(frozen=True)
class Box:
    lower: tuple
    upper: tuple

    def __post_init__(self):
        if len(self.lower) != len(self.upper):
            raise ValueError("bound lengths differ")
        if any(l > u for l, u in zip(self.lower, self.upper)):
            raise ValueError("lower bound exceeds upper bound")


def _vertex_box(P: HRepPolyhedron) -> Box | None:
    """Bounding box of the vertices; None when the polyhedron is empty."""
    verts = vertex_points(P)
    if not verts:
        return None
    lo = tuple(math.ceil(min(v[j] for v in verts)) for j in range(P.n))
    hi = tuple(math.floor(max(v[j] for v in verts)) for j in range(P.n))
    if any(l > u for l, u in zip(lo, hi)):
        return None
    return Box(lower=lo, upper=hi)


def brute_count(P: HRepPolyhedron, box: Box | None = None) -> int:
    """|P intersect Z^n| by exhaustive scan with exact membership tests.

    Inequality form scans the whole box; standard form recurses over the
    coordinates, pruning branches whose residual right-hand side is outside
    the interval still reachable from the remaining coordinates.
    """
    if box is None:
        if not is_bounded(P):
            raise Unbounded("brute_count needs a box for unbounded polyhedra")
        box = _vertex_box(P)
        if box is None:
            return 0
    if P.form == "standard":
        return _scan_standard(P, box)
    sizes = [u - l + 1 for l, u in zip(box.lower, box.upper)]
    total = math.prod(sizes)
    if total > SCAN_CAP:
        raise ValueError(f"scan of {total} candidates exceeds cap {SCAN_CAP}")
    if total <= 0:
        return 0
    A, b, n = P.A, P.b, P.n
    rows = [A.row(i) for i in range(A.rows)]
    count = 0
    for pt in product(*(range(l, u + 1) for l, u in zip(box.lower, box.upper))):
        ok = True
        for r, beta in zip(rows, b):
            if sum(r[j] * pt[j] for j in range(n)) > beta:
                ok = False
                break
        if ok:
            count += 1
    return count


def _scan_standard(P: HRepPolyhedron, box: Box) -> int:
    A, b, n = P.A, P.b, P.n
    k = A.rows
    lo = [max(l, 0) for l in box.lower]
    hi = list(box.upper)
    if any(l > u for l, u in zip(lo, hi)):
        return 0
    cols = [A.col(j) for j in range(n)]
    # interval of values each suffix of coordinates can still contribute
    suffix_lo = [[0] * k for _ in range(n + 1)]
    suffix_hi = [[0] * k for _ in range(n + 1)]
    for j in range(n - 1, -1, -1):
        for i in range(k):
            vals = (cols[j][i] * lo[j], cols[j][i] * hi[j])
            suffix_lo[j][i] = suffix_lo[j + 1][i] + min(vals)
            suffix_hi[j][i] = suffix_hi[j + 1][i] + max(vals)
    count = 0
    nodes = 0

    def rec(j, residual):
        nonlocal count, nodes
        nodes += 1
        if nodes > SCAN_CAP:
            raise ValueError(f"scan exceeds cap {SCAN_CAP}")
        if j == n:
            if all(r == 0 for r in residual):
                count += 1
            return
        col = cols[j]
        for x in range(lo[j], hi[j] + 1):
            nxt = tuple(residual[i] - col[i] * x for i in range(k))
            if any(
                nxt[i] < suffix_lo[j + 1][i] or nxt[i] > suffix_hi[j + 1][i]
                for i in range(k)
            ):
                continue
            rec(j + 1, nxt)

    rec(0, tuple(b))
    return count


@dataclass
class CheckReport:
    passed: bool
    samples: int
    failures: list = field(default_factory=list)


def _member_scaled(rows, point) -> bool:
    """point in cone(U) given integer rows proportional to rows of U^(-1)."""
    for row in rows:
        if sum(a * x for a, x in zip(row, point)) < 0:
            return False
    return True


def indicator_identity_check(
    target: IntMatrix, signed, samples: int = 100, seed: int = 0
) -> CheckReport:
    """Check sum(eps_i [cone(U_i)]) == [cone(U)] at random rational points.

    Sample points are a/97 with integer numerators; a point is rejected if
    it lies on any hyperplane spanned by n-1 generators of an involved
    cone, so every indicator is unambiguous. Membership tests run on
    adjugate rows scaled by the determinant sign, keeping everything in
    integer arithmetic.
    """
    n = target.rows
    rng = random.Random(seed)
    cones = [(1, target)] + [(sc.sign, sc.U) for sc in signed]
    normals = set()
    for _, mat in cones:
        if n == 1:
            normals.add((1,))
            continue
        for subset in combinations(range(mat.cols), n - 1):
            nu = orthogonal_vector(mat.take_columns(subset))
            if any(x != 0 for x in nu):
                normals.add(nu)
    normals = sorted(normals)
    tests = []
    for sign, mat in cones:
        d = det(mat)
        if d == 0:
            raise ValueError("indicator check expects nonsingular cones")
        adj = adjugate(mat)
        scale = 1 if d > 0 else -1
        rows = [
            tuple(scale * adj[i, j] for j in range(n)) for i in range(n)
        ]
        tests.append((sign, rows))
    magnitude = max(m.max_abs() for _, m in cones)
    bound = max(10 * magnitude, 10) * 97
    report = CheckReport(passed=True, samples=samples)
    for _ in range(samples):
        while True:
            pt = tuple(rng.randint(-bound, bound) for _ in range(n))
            if all(x == 0 for x in pt):
                continue
            if all(
                sum(a * x for a, x in zip(nu, pt)) != 0 for nu in normals
            ):
                break
        lhs = sum(sign for sign, rows in tests[1:] if _member_scaled(rows, pt))
        rhs = 1 if _member_scaled(tests[0][1], pt) else 0
        if lhs != rhs:
            report.passed = False
            report.failures.append(
                (tuple(Fraction(x, 97) for x in pt), lhs, rhs)
            )
    return report
