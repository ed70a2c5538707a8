"""Specialization of short rational generating functions.

The limit X -> 1 is taken along a generic one-parameter curve
X_i = exp(tau * l_i): every term becomes a Laurent series in tau whose
negative parts cancel for polytopes, and the count is the constant term.
All series arithmetic is exact rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NonPolytope, PoleAt
from .genfun import ShortRationalFunction


@dataclass(frozen=True)
class GenericDirection:
    """Moment-curve direction l with the induced pairings.

    xi[i][j] = <l, u_ij> over the denominators of term i (all nonzero);
    eta[i][m] = <l, w_im> over the numerator exponents of term i.
    """

    l: tuple
    xi: tuple
    eta: tuple


@dataclass(frozen=True)
class ToddTable:
    values: tuple


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def generic_direction(f: ShortRationalFunction) -> GenericDirection:
    """Smallest moment-curve vector avoiding every denominator hyperplane."""
    if not f.terms:
        raise ValueError("need a nonempty generating function")
    dens = {u for t in f.terms for u in t.denominator}
    tau = 1
    while True:
        l = tuple(tau**i for i in range(f.n))
        if all(_dot(l, u) != 0 for u in dens):
            break
        tau += 1
    xi = tuple(
        tuple(_dot(l, u) for u in t.denominator) for t in f.terms
    )
    eta = tuple(
        tuple(_dot(l, e) for _, e in t.numerator) for t in f.terms
    )
    return GenericDirection(l=l, xi=xi, eta=eta)


def _series_mul(a, b, order: int):
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a):
        if i > order or ai == 0:
            continue
        for j, bj in enumerate(b):
            if i + j > order:
                break
            out[i + j] += ai * bj
    return out


def _series_inv(a, order: int):
    """Reciprocal of a power series with a[0] == 1, truncated."""
    assert a[0] == 1
    out = [Fraction(0)] * (order + 1)
    out[0] = Fraction(1)
    for k in range(1, order + 1):
        acc = Fraction(0)
        for i in range(1, min(k, len(a) - 1) + 1):
            acc += a[i] * out[k - i]
        out[k] = -acc
    return out


@lru_cache(maxsize=None)
def _h_base(order: int):
    """Coefficients of y / (e^y - 1), exact, up to the given order."""
    g = [Fraction(1, math.factorial(k + 1)) for k in range(order + 1)]
    return tuple(_series_inv(g, order))


@lru_cache(maxsize=None)
def _h_series(xi: int, order: int):
    """Coefficients of tau*xi / (e^(tau*xi) - 1) as a series in tau."""
    base = _h_base(order)
    return tuple(base[k] * Fraction(xi) ** k for k in range(order + 1))


@lru_cache(maxsize=None)
def _exp_series(eta: int, order: int):
    return tuple(
        Fraction(eta**k, math.factorial(k)) for k in range(order + 1)
    )


def todd_values(xi) -> ToddTable:
    """Exact values td_0..td_d of the Todd polynomials at the given xi.

    These are the Taylor coefficients of prod_i tau*xi_i / (1 - exp(-tau*xi_i)).
    """
    xi = tuple(int(x) for x in xi)
    if any(x == 0 for x in xi):
        raise ValueError("Todd values need nonzero arguments")
    d = len(xi)
    prod = [Fraction(1)] + [Fraction(0)] * d
    for x in xi:
        prod = _series_mul(prod, _h_series(-x, d), d)
    return ToddTable(values=tuple(prod))


def _term_laurent(term, xis, etas, order: int):
    """Laurent coefficients of a term along the curve, degrees -D..order-D."""
    d = len(xis)
    num = [Fraction(0)] * (order + 1)
    for (c, _), eta in zip(term.numerator, etas):
        es = _exp_series(eta, order)
        for k in range(order + 1):
            num[k] += c * es[k]
    series = num
    for x in xis:
        series = _series_mul(series, _h_series(x, order), order)
    scale = Fraction((-1) ** d, math.prod(xis) if xis else 1)
    return [scale * v for v in series]


def specialize_count(f: ShortRationalFunction) -> int:
    """Exact number of lattice points encoded by the SRF of a polytope.

    Sums the truncated Laurent expansions of all terms; raises NonPolytope
    when the negative-degree parts fail to cancel (the series does not
    converge to a finite count).
    """
    if not f.terms:
        return 0
    gd = generic_direction(f)
    dmax = max(len(t.denominator) for t in f.terms)
    total = [Fraction(0)] * (dmax + 1)  # index = degree + dmax
    for term, xis, etas in zip(f.terms, gd.xi, gd.eta):
        d = len(xis)
        coeffs = _term_laurent(term, xis, etas, d)
        for s in range(d + 1):
            total[s - d + dmax] += coeffs[s]
    for deg in range(-dmax, 0):
        if total[deg + dmax] != 0:
            raise NonPolytope("negative-degree coefficients do not cancel")
    const = total[dmax]
    if const.denominator != 1:
        raise NonPolytope("limit is not an integer")
    return int(const)


def specialize_count_todd(f: ShortRationalFunction) -> Fraction:
    """Cross-check evaluation through explicit Todd polynomial values.

    Algebraically identical to specialize_count's series route; returns the
    raw rational so tests can compare the two paths.
    """
    if not f.terms:
        return Fraction(0)
    gd = generic_direction(f)
    total = Fraction(0)
    for term, xis, etas in zip(f.terms, gd.xi, gd.eta):
        d = len(xis)
        td = todd_values(xis).values if xis else (Fraction(1),)
        scale = Fraction(1, math.prod(xis) if xis else 1)
        acc = Fraction(0)
        for (c, _), eta in zip(term.numerator, etas):
            inner = Fraction(0)
            for j in range(d + 1):
                inner += Fraction((-eta) ** j, math.factorial(j)) * td[d - j]
            acc += c * inner
        total += scale * acc
    return total


def _monomial(x, e):
    val = Fraction(1)
    for xi, ei in zip(x, e):
        if ei == 0:
            continue
        if xi == 0 and ei < 0:
            raise PoleAt("zero coordinate raised to a negative power")
        val *= Fraction(xi) ** ei
    return val


def evaluate_at(f: ShortRationalFunction, x) -> Fraction:
    """Exact value of the rational function away from its poles."""
    x = tuple(Fraction(v) for v in x)
    if len(x) != f.n:
        raise ValueError("evaluation point has wrong dimension")
    total = Fraction(0)
    for t in f.terms:
        den = Fraction(1)
        for u in t.denominator:
            factor = 1 - _monomial(x, u)
            if factor == 0:
                raise PoleAt(f"denominator factor vanishes at {x}")
            den *= factor
        num = sum((c * _monomial(x, e) for c, e in t.numerator), Fraction(0))
        total += num / den
    return total
