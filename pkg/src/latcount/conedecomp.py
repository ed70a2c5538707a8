"""Triangulation and signed unimodular decomposition of simplicial cones.

The decomposition replaces a generator with an integer "half vector"
b = U t, 0 < ||t||_inf <= 1/2, obtained from the Smith normal form of U.
Each replacement at least halves |det|, so the recursion reaches
unimodular cones after at most log2 |det U| levels and produces at most
n^(log2 |det U|) signed cones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotFullDim, NotPointed, SingularMatrix, UnimodularInput
from .intlinalg import (
    IntMatrix,
    det,
    orthogonal_vector,
    rank,
    snf,
    unimodular_inverse,
)
from .polyhedron import _feasible


@dataclass(frozen=True)
class SignedCone:
    sign: int
    U: IntMatrix


@dataclass(frozen=True)
class HalfVector:
    b: tuple
    t: tuple


def find_half_vector(U: IntMatrix) -> HalfVector:
    """Integer vector b = U t with 0 < ||t||_inf <= 1/2.

    Construction: take the last column of the inverse right SNF transform,
    shift each component into (-sigma/2, sigma/2] by multiples of
    sigma = S_nn, and divide by sigma. Components landing exactly on the
    boundary keep the value +sigma/2.
    """
    n = U.rows
    if U.cols != n:
        raise ValueError("expected a square matrix")
    d = det(U)
    if d == 0:
        raise SingularMatrix("half vector needs a nonsingular matrix")
    if abs(d) == 1:
        raise UnimodularInput("unimodular cones decompose trivially")
    res = snf(U)
    sigma = res.S[-1]
    qinv = unimodular_inverse(res.Q)
    that = list(qinv.col(n - 1))
    for i in range(n):
        r = that[i] % sigma
        if 2 * r > sigma:
            r -= sigma
        that[i] = r
    if all(x == 0 for x in that):
        raise SingularMatrix("half-vector construction degenerated")
    # the replacement identity needs b on the non-negative side of cone(U):
    # with every t_i <= 0 it drops a full-dimensional correction term
    if all(x <= 0 for x in that):
        that = [-x for x in that]
    b = []
    for x in U.mul_vec(that):
        if x % sigma != 0:
            raise SingularMatrix("half-vector image is not integral")
        b.append(x // sigma)
    t = tuple(Fraction(x, sigma) for x in that)
    return HalfVector(b=tuple(b), t=t)


def sign_decompose(U: IntMatrix):
    """Signed decomposition of cone(U) into unimodular cones.

    Children are produced by replacing one column with the half vector;
    the sign compares orientations and zero-determinant children are
    dropped. The identity sum(eps_i [cone(U_i)]) = [cone(U)] holds modulo
    lower-dimensional cones.
    """
    d0 = det(U)
    if d0 == 0:
        raise SingularMatrix("cannot decompose a degenerate cone")
    out = []
    stack = [(1, U, d0)]
    while stack:
        sign, mat, dval = stack.pop()
        if abs(dval) == 1:
            out.append(SignedCone(sign=sign, U=mat))
            continue
        hv = find_half_vector(mat)
        for i in range(mat.cols):
            if hv.t[i] == 0:
                continue
            child = mat.replace_column(i, hv.b)
            dchild = det(child)
            if dchild == 0:
                continue
            eps = 1 if (dchild > 0) == (dval > 0) else -1
            stack.append((sign * eps, child, dchild))
    return out


def polarize_unimodular(U: IntMatrix) -> IntMatrix:
    """Polar data of a unimodular cone: -U^(-1).

    With generators as the columns of U, the rows of the returned matrix
    generate the polar cone cone(U)°. Raises NotUnimodular otherwise.
    """
    return -unimodular_inverse(U)


def _is_pointed(G: IntMatrix) -> bool:
    """cone(G) is pointed iff 0 is not a positive combination of columns."""
    m = G.cols
    rows = []
    for i in range(G.rows):
        r = G.row(i)
        rows.append((r, 0))
        rows.append((tuple(-x for x in r), 0))
    for j in range(m):
        rows.append((tuple(-1 if t == j else 0 for t in range(m)), 0))
    ones = tuple(1 for _ in range(m))
    rows.append((ones, 1))
    rows.append((tuple(-x for x in ones), -1))
    return not _feasible(rows)


def triangulate(G: IntMatrix):
    """Placing triangulation of a pointed full-dimensional cone.

    Columns are inserted in their given order; each new generator outside
    the current cone is joined to the boundary facets visible from it.
    Returns the simplicial cones as sorted tuples of column indices.
    """
    d, m = G.rows, G.cols
    nonzero = [j for j in range(m) if any(x != 0 for x in G.col(j))]
    if rank(G) < d:
        raise NotFullDim("cone does not span the ambient space")
    if len(nonzero) > d and not _is_pointed(G.take_columns(nonzero)):
        raise NotPointed("cone contains a line")

    # initial full-dimensional cell: first rank-increasing columns
    init = []
    for j in nonzero:
        trial = init + [j]
        if rank(G.take_columns(trial)) == len(trial):
            init = trial
        if len(init) == d:
            break
    cells = [tuple(init)]
    processed = set(init)

    for j in nonzero:
        if j in processed:
            continue
        processed.add(j)
        p = G.col(j)
        # boundary facets appear in exactly one cell
        facet_owner = {}
        for cell in cells:
            for g in cell:
                f = tuple(sorted(set(cell) - {g}))
                if f in facet_owner:
                    facet_owner[f] = None
                else:
                    facet_owner[f] = g
        new_cells = []
        for f, opp in facet_owner.items():
            if opp is None:
                continue
            nu = orthogonal_vector(G.take_columns(f)) if f else (1,)
            s_opp = sum(nu[i] * G[i, opp] for i in range(d))
            s_p = sum(nu[i] * p[i] for i in range(d))
            if s_p == 0 or (s_p > 0) == (s_opp > 0):
                continue
            new_cells.append(tuple(sorted(f + (j,))))
        cells.extend(new_cells)
    return [tuple(sorted(c)) for c in cells]
