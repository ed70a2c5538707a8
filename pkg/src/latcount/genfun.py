"""Assembly of short rational generating functions.

Three routes produce sums of terms  sum_m c_m X^e_m / prod_j (1 - X^u_j):
tangent-cone decomposition for inequality form, the integer parametrization
for standard form, and half-open triangulation of the homogenized cone for
V-representations.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .conedecomp import polarize_unimodular, sign_decompose, triangulate
from .errors import Infeasible, NotFullDim, RankDeficient, SingularMatrix
from .intlinalg import IntMatrix, det, fraction_inverse, rank, snf
from .polyhedron import (
    HRepPolyhedron,
    feasible_cone_polar_generators,
    normalize_standard,
    recession_rays,
    standard_to_inequality,
    vertices,
)


@dataclass(frozen=True)
class SRFTerm:
    """numerator: ((coeff, exponent-vector), ...); denominator: (vector, ...).

    Represents  sum_m c_m X^(e_m) / prod_j (1 - X^(u_j)).
    """

    numerator: tuple
    denominator: tuple


@dataclass(frozen=True)
class ShortRationalFunction:
    n: int
    terms: tuple

    def is_zero(self) -> bool:
        return not self.terms


@dataclass(frozen=True)
class HalfOpenCone:
    """Simplicial cone with per-generator strictness flags.

    open_facet[j] is True when the coordinate t_j of x = sum t_j g_j must
    be strictly positive.
    """

    generators: IntMatrix
    open_facet: tuple


@dataclass(frozen=True)
class GfInfo:
    """Shape of the system the decomposition actually ran on.

    dim and extra_rows are the d and k entering the term-count bound;
    system is the constraint matrix whose minors bound the decomposition.
    """

    dim: int
    extra_rows: int
    system: IntMatrix | None


def vertex_round(v, B: IntMatrix):
    """Lattice-preserving integral offset: w = B * ceil(B^-1 v).

    (v + cone(B)) and (w + cone(B)) contain the same lattice points when
    B is unimodular.
    """
    inv = fraction_inverse(B)
    if inv is None:
        raise SingularMatrix("vertex rounding needs a nonsingular matrix")
    v = [Fraction(x) for x in v]
    t = [sum(row[j] * v[j] for j in range(len(v))) for row in inv]
    ceil_t = [math.ceil(x) for x in t]
    return tuple(B.mul_vec(ceil_t))


def _zero(n: int) -> ShortRationalFunction:
    return ShortRationalFunction(n=n, terms=())


def _point_srf(n: int, point) -> ShortRationalFunction:
    term = SRFTerm(numerator=((1, tuple(point)),), denominator=())
    return ShortRationalFunction(n=n, terms=(term,))


def _map_srf(f: ShortRationalFunction, B: IntMatrix, r) -> ShortRationalFunction:
    """Push an SRF through the monomial substitution induced by x = r + B z."""
    n = B.rows
    terms = []
    for t in f.terms:
        num = tuple(
            (c, tuple(ri + wi for ri, wi in zip(r, B.mul_vec(e))))
            for c, e in t.numerator
        )
        den = tuple(tuple(B.mul_vec(u)) for u in t.denominator)
        if any(all(x == 0 for x in u) for u in den):
            raise SingularMatrix("substitution collapsed a denominator vector")
        terms.append(SRFTerm(numerator=num, denominator=den))
    return ShortRationalFunction(n=n, terms=tuple(terms))


def _row_basis(A: IntMatrix):
    """Indices of a greedy row basis of A."""
    idx = []
    for i in range(A.rows):
        trial = idx + [i]
        if rank(A.take_rows(trial)) == len(trial):
            idx.append(i)
    return idx


def _gf_inequality_info(P: HRepPolyhedron):
    if P.form != "inequality":
        raise ValueError("expected inequality form")
    n = P.n
    if rank(P.A) < n:
        raise RankDeficient("inequality form needs full column rank")
    # full column rank makes P pointed, so emptiness = no vertices
    verts = vertices(P)
    if not verts:
        return _zero(n), GfInfo(dim=0, extra_rows=0, system=None)
    rays = recession_rays(P)
    dim = _affine_dim(verts, rays, n)

    if dim < n:
        return _reduce_degenerate(P, verts, rays, dim)

    terms = []
    for vi in verts:
        polar = feasible_cone_polar_generators(P, vi)
        for cell in triangulate(polar):
            simple = polar.take_columns(cell)
            for sc in sign_decompose(simple):
                dual = polarize_unimodular(sc.U).transpose()
                w = vertex_round(vi.v, dual)
                terms.append(
                    SRFTerm(
                        numerator=((sc.sign, w),),
                        denominator=tuple(dual.columns()),
                    )
                )
    info = GfInfo(dim=n, extra_rows=P.A.rows - n, system=P.A)
    return ShortRationalFunction(n=n, terms=tuple(terms)), info


def _affine_dim(verts, rays, n: int) -> int:
    v0 = verts[0].v
    denoms = [x.denominator for vi in verts for x in vi.v]
    scale = math.lcm(*denoms)
    dirs = [
        [int((vi.v[j] - v0[j]) * scale) for j in range(n)] for vi in verts[1:]
    ]
    dirs.extend([list(r) for r in rays])
    if not dirs:
        return 0
    return rank(IntMatrix([[row[j] for row in dirs] for j in range(n)], cols=len(dirs)))


def _reduce_degenerate(P: HRepPolyhedron, verts, rays, dim: int):
    """Lower-dimensional P: eliminate the implicit equalities.

    Rows tight on every vertex and ray cut out an affine subspace; integer
    points of that subspace are parametrized by r + B Z^d, and the
    remaining rows become a full-dimensional system over the parameters.
    """
    A, b, n = P.A, P.b, P.n
    implicit = []
    for i in range(A.rows):
        row = A.row(i)
        tight = all(
            sum(row[j] * vi.v[j] for j in range(n)) == b[i] for vi in verts
        ) and all(sum(row[j] * ray[j] for j in range(n)) == 0 for ray in rays)
        if tight:
            implicit.append(i)
    eq = A.take_rows(implicit)
    basis = _row_basis(eq)
    eqb = eq.take_rows(basis)
    g = [b[implicit[i]] for i in basis]
    try:
        eqn, gn = normalize_standard(eqb, g)
        tr = standard_to_inequality(eqn, gn)
    except Infeasible:
        return _zero(n), GfInfo(dim=dim, extra_rows=0, system=None)

    if tr.d == 0:
        return _point_srf(n, tr.r), GfInfo(dim=0, extra_rows=0, system=None)

    rest = [i for i in range(A.rows) if i not in set(implicit)]
    new_rows, new_b = [], []
    for i in rest:
        row = A.row(i)
        coeffs = [
            sum(row[t] * tr.B[t, j] for t in range(n)) for j in range(tr.d)
        ]
        rhs = b[i] - sum(row[t] * tr.r[t] for t in range(n))
        if all(c == 0 for c in coeffs):
            if rhs < 0:
                return _zero(n), GfInfo(dim=dim, extra_rows=0, system=None)
            continue
        new_rows.append(coeffs)
        new_b.append(rhs)
    hat = HRepPolyhedron("inequality", IntMatrix(new_rows, cols=tr.d), tuple(new_b))
    sub, info = _gf_inequality_info(hat)
    return _map_srf(sub, tr.B, tr.r), info


def gf_inequality(P: HRepPolyhedron) -> ShortRationalFunction:
    """Short rational generating function of {x : Ax <= b}, rank A = n.

    Pipeline: vertices, polar tangent cones, triangulation, signed
    unimodular decomposition, dualization, and lattice-preserving vertex
    rounding. Empty input gives the zero function.
    """
    f, _ = _gf_inequality_info(P)
    return f


def _gf_standard_info(P: HRepPolyhedron):
    if P.form != "standard":
        raise ValueError("expected standard form")
    n, k = P.n, P.A.rows
    if rank(P.A) < k:
        raise RankDeficient("standard form needs full row rank")
    try:
        aprime, bprime = normalize_standard(P.A, P.b)
        tr = standard_to_inequality(aprime, bprime)
    except Infeasible:
        return _zero(n), GfInfo(dim=0, extra_rows=0, system=None)
    if tr.d == 0:
        info = GfInfo(dim=0, extra_rows=0, system=None)
        if all(x >= 0 for x in tr.r):
            return _point_srf(n, tr.r), info
        return _zero(n), info
    hat = HRepPolyhedron("inequality", tr.A_hat, tr.b_hat)
    fhat, info = _gf_inequality_info(hat)
    return _map_srf(fhat, tr.B, tr.r), info


def gf_standard(P: HRepPolyhedron) -> ShortRationalFunction:
    """Short rational generating function of {x >= 0 : Ax = b}, rank A = k.

    Works in the integer parametrization x = r + B z of the equality
    lattice and maps the parameter-space function back to Z^n.
    """
    f, _ = _gf_standard_info(P)
    return f


def half_open_flags(cones, seed: int = 0):
    """Assign strictness flags so the simplicial cones partition their union.

    A generic reference point q in the interior of the union decides every
    shared facet: the facet stays closed in the cone whose side contains q.
    """
    cones = list(cones)
    if not cones:
        return []
    d = cones[0].rows
    inverses = []
    for c in cones:
        inv = fraction_inverse(c)
        if inv is None:
            raise SingularMatrix("triangulation cells must be nonsingular")
        inverses.append(inv)
    gens = [g for c in cones for g in c.columns()]
    rng = random.Random(seed)
    while True:
        coeffs = [rng.randint(1, 9973) for _ in gens]
        q = tuple(
            sum(c * g[i] for c, g in zip(coeffs, gens)) for i in range(d)
        )
        bary = [
            [sum(row[j] * q[j] for j in range(d)) for row in inv]
            for inv in inverses
        ]
        if all(all(x != 0 for x in t) for t in bary):
            break
    out = []
    for cone, t in zip(cones, bary):
        flags = tuple(x < 0 for x in t)
        out.append(HalfOpenCone(generators=cone, open_facet=flags))
    return out


def parallelepiped_points(B: IntMatrix, strict=None):
    """Lattice points of the half-open fundamental parallelepiped of B.

    Coordinate j of the preimage runs over [0, 1) normally and over (0, 1]
    when strict[j] is set. One point per residue class of Z^n / B Z^n, so
    the count always equals |det B|.
    """
    n = B.rows
    d = det(B)
    if d == 0:
        raise SingularMatrix("parallelepiped needs a nonsingular matrix")
    if strict is None:
        strict = (False,) * n
    strict = tuple(bool(x) for x in strict)
    res = snf(B)
    inv = fraction_inverse(B)
    pts = []
    reps = [[0] * n]
    for i, s in enumerate(res.S):
        reps = [r[:i] + [u] + r[i + 1 :] for r in reps for u in range(s)]
    for u in reps:
        x = res.P.mul_vec(u)
        t = [sum(row[j] * x[j] for j in range(n)) for row in inv]
        shifted = []
        for j in range(n):
            if strict[j]:
                shifted.append(t[j] - (math.ceil(t[j]) - 1))
            else:
                shifted.append(t[j] - math.floor(t[j]))
        pt = B.mul_vec(shifted)
        assert all(x.denominator == 1 for x in pt)
        pts.append(tuple(int(x) for x in pt))
    assert len(set(pts)) == abs(d)
    return sorted(pts)


def _merge_monomials(monomials):
    acc = {}
    for c, e in monomials:
        acc[e] = acc.get(e, 0) + c
    return tuple((c, e) for e, c in sorted(acc.items()) if c != 0)


def gf_vrep(P: IntMatrix, R: IntMatrix | None = None) -> ShortRationalFunction:
    """Generating function of conv(P) + cone(R) from vertex/ray data.

    Homogenizes with a leading coordinate, triangulates, makes the cells
    half-open, enumerates each fundamental parallelepiped, and extracts
    the degree-1 slice of the homogenizing variable symbolically.
    """
    n = P.rows
    s1, s2 = P.cols, (R.cols if R is not None else 0)
    if R is not None and R.rows != n:
        raise ValueError("ray matrix dimension mismatch")

    # dimension check on conv(P) + cone(R)
    p0 = P.col(0)
    dirs = [[P[i, j] - p0[i] for i in range(n)] for j in range(1, s1)]
    if R is not None:
        dirs.extend([list(R.col(j)) for j in range(s2)])
    if not dirs or rank(IntMatrix([[row[i] for row in dirs] for i in range(n)], cols=len(dirs))) < n:
        raise NotFullDim("conv(P) + cone(R) must be full-dimensional")

    if R is not None:
        from .conedecomp import _is_pointed

        live = [j for j in range(s2) if any(x != 0 for x in R.col(j))]
        if live and not _is_pointed(R.take_columns(live)):
            return _zero(n)  # a line makes the generating function vanish

    cols = []
    for j in range(s1):
        cols.append((1,) + P.col(j))
    for j in range(s2):
        cols.append((0,) + R.col(j))
    hom = IntMatrix.from_columns(cols)

    cells = triangulate(hom)
    hocs = half_open_flags([hom.take_columns(c) for c in cells])

    terms = []
    for hoc in hocs:
        gens = hoc.generators.columns()
        assert all(g[0] in (0, 1) for g in gens)
        pts = parallelepiped_points(hoc.generators, hoc.open_facet)
        f0 = [g[1:] for g in gens if g[0] == 0]
        f1 = [g[1:] for g in gens if g[0] == 1]
        monomials = []
        for m in pts:
            if m[0] == 1:
                monomials.append((1, m[1:]))
            elif m[0] == 0:
                for a in f1:
                    monomials.append((1, tuple(x + y for x, y in zip(m[1:], a))))
        num = _merge_monomials(monomials)
        if not num:
            continue
        terms.append(SRFTerm(numerator=num, denominator=tuple(f0)))
    return ShortRationalFunction(n=n, terms=tuple(terms))


def srf_to_json(f: ShortRationalFunction) -> dict:
    return {
        "n": f.n,
        "terms": [
            {
                "num": [
                    {"c": str(c), "e": [str(x) for x in e]} for c, e in t.numerator
                ],
                "den": [[str(x) for x in u] for u in t.denominator],
            }
            for t in f.terms
        ],
    }


def srf_from_json(data: dict) -> ShortRationalFunction:
    terms = []
    for t in data["terms"]:
        num = tuple(
            (int(m["c"]), tuple(int(x) for x in m["e"])) for m in t["num"]
        )
        den = tuple(tuple(int(x) for x in u) for u in t["den"])
        terms.append(SRFTerm(numerator=num, denominator=den))
    return ShortRationalFunction(n=int(data["n"]), terms=tuple(terms))
