"""Ehrhart quasi-polynomials of bounded rational polyhedra.

The counting function m -> |mP meet Z^n| is a degree-d polynomial in m
with coefficients that repeat with period t, where t P is a lattice
polytope. Coefficients are recovered per residue class by exact
interpolation of counts of dilated instances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import Empty, NonInteger, Unbounded
from .evaluate import specialize_count
from .genfun import gf_inequality, gf_standard
from .polyhedron import HRepPolyhedron, is_bounded, vertex_points


@dataclass(frozen=True)
class QuasiPolynomial:
    """coeffs[rho] holds e_0..e_d for dilation factors m with m % period == rho."""

    dim: int
    period: int
    coeffs: tuple


def dilation_period(P: HRepPolyhedron) -> int:
    """Smallest t from vertex denominators such that tP is a lattice polytope."""
    if not is_bounded(P):
        raise Unbounded("dilation period needs a bounded polyhedron")
    verts = vertex_points(P)
    if not verts:
        raise Empty("dilation period needs a nonempty polyhedron")
    denoms = [x.denominator for v in verts for x in v]
    return math.lcm(*denoms)


def _dilate(P: HRepPolyhedron, q: int) -> HRepPolyhedron:
    return HRepPolyhedron(P.form, P.A, tuple(q * x for x in P.b))


def count_dilated(P: HRepPolyhedron, q: int) -> int:
    f = gf_inequality(_dilate(P, q)) if P.form == "inequality" else gf_standard(
        _dilate(P, q)
    )
    return specialize_count(f)


def _interpolate(xs, ys):
    """Exact coefficients of the polynomial through the given points."""
    n = len(xs)
    rows = [[Fraction(x) ** j for j in range(n)] + [Fraction(y)] for x, y in zip(xs, ys)]
    for col in range(n):
        piv = next(i for i in range(col, n) if rows[i][col] != 0)
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [v * inv for v in rows[col]]
        for i in range(n):
            if i != col and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[col])]
    return tuple(rows[j][n] for j in range(n))


def ehrhart_quasipolynomial(P: HRepPolyhedron) -> QuasiPolynomial:
    """Quasi-polynomial of a bounded nonempty polyhedron, for m >= 1.

    For each residue class, counts at d+1 dilations spaced by the period
    pin down the coefficients exactly.
    """
    t = dilation_period(P)
    d = P.n if P.form == "inequality" else P.n - P.A.rows
    coeffs = []
    for rho in range(t):
        base = rho if rho >= 1 else t
        qs = [base + j * t for j in range(d + 1)]
        cs = [count_dilated(P, q) for q in qs]
        coeffs.append(_interpolate(qs, cs))
    return QuasiPolynomial(dim=d, period=t, coeffs=tuple(coeffs))


def eval_quasipolynomial(qp: QuasiPolynomial, m: int) -> int:
    """Value sum_j e_j(m mod t) m^j; defined for m >= 1."""
    if m < 1:
        raise ValueError("quasi-polynomial is defined for m >= 1")
    e = qp.coeffs[m % qp.period]
    val = sum((e[j] * Fraction(m) ** j for j in range(len(e))), Fraction(0))
    if val.denominator != 1:
        raise NonInteger(f"quasi-polynomial value {val} is not integral")
    return int(val)


def qp_to_json(qp: QuasiPolynomial) -> dict:
    return {
        "period": qp.period,
        "coeffs": [[str(c) for c in row] for row in qp.coeffs],
    }


def qp_from_json(data: dict) -> QuasiPolynomial:
    coeffs = tuple(
        tuple(Fraction(c) for c in row) for row in data["coeffs"]
    )
    dim = len(coeffs[0]) - 1 if coeffs else 0
    return QuasiPolynomial(dim=dim, period=int(data["period"]), coeffs=coeffs)
