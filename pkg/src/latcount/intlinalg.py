"""Exact integer linear algebra.

Determinants by fraction-free elimination, adjugates, Hermite and Smith
normal forms with unimodular transforms, and exhaustive minor statistics.
No floating point anywhere; rational intermediates use fractions.Fraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import NotUnimodular, RankDeficient, SingularMatrix


class IntMatrix:
    """Dense, immutable matrix of arbitrary-precision integers.

    Rows may be 0 (used for empty blocks of decomposition results);
    the column count must always be at least 1.
    """

    __slots__ = ("_data", "_cols")

    def __init__(self, rows, cols: int | None = None):
        data = []
        for row in rows:
            r = tuple(row)
            if not all(isinstance(x, int) for x in r):
                raise TypeError("matrix entries must be integers")
            data.append(r)
        self._data = tuple(data)
        if self._data:
            self._cols = len(self._data[0])
            if any(len(r) != self._cols for r in self._data):
                raise ValueError("rows have inconsistent lengths")
            if cols is not None and cols != self._cols:
                raise ValueError("explicit cols disagrees with row length")
        else:
            if cols is None:
                raise ValueError("a matrix with no rows needs an explicit column count")
            self._cols = cols
        if self._cols < 0:
            raise ValueError("negative column count")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def from_columns(cls, columns, rows: int | None = None) -> "IntMatrix":
        cols = [tuple(c) for c in columns]
        if not cols:
            raise ValueError("need at least one column")
        n = len(cols[0]) if rows is None else rows
        return cls([[c[i] for c in cols] for i in range(n)])

    @property
    def rows(self) -> int:
        return len(self._data)

    @property
    def cols(self) -> int:
        return self._cols

    def __getitem__(self, key):
        i, j = key
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def columns(self):
        return [self.col(j) for j in range(self._cols)]

    def tolists(self):
        return [list(r) for r in self._data]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            [[self._data[i][j] for i in range(self.rows)] for j in range(self._cols)],
            cols=self.rows if self.rows else None,
        )

    def take_rows(self, idx) -> "IntMatrix":
        return IntMatrix([self._data[i] for i in idx], cols=self._cols)

    def take_columns(self, idx) -> "IntMatrix":
        idx = list(idx)
        return IntMatrix([[r[j] for j in idx] for r in self._data], cols=len(idx))

    def replace_column(self, j: int, column) -> "IntMatrix":
        column = list(column)
        return IntMatrix(
            [row[:j] + (column[i],) + row[j + 1 :] for i, row in enumerate(self._data)],
            cols=self._cols,
        )

    def vstack(self, other: "IntMatrix") -> "IntMatrix":
        if other.cols != self._cols:
            raise ValueError("column counts differ")
        return IntMatrix(self._data + other._data, cols=self._cols)

    def mul_vec(self, v):
        """Matrix-vector product; works for integer or Fraction vectors."""
        v = list(v)
        if len(v) != self._cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(r[j] * v[j] for j in range(self._cols)) for r in self._data)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self._cols != other.rows:
            raise ValueError("inner dimensions differ")
        ocols = other.cols
        odata = other._data
        out = []
        for r in self._data:
            out.append(
                [sum(r[k] * odata[k][j] for k in range(self._cols)) for j in range(ocols)]
            )
        return IntMatrix(out, cols=ocols)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-x for x in r] for r in self._data], cols=self._cols)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntMatrix)
            and self._data == other._data
            and self._cols == other._cols
        )

    def __hash__(self):
        return hash((self._data, self._cols))

    def max_abs(self) -> int:
        return max((abs(x) for r in self._data for x in r), default=0)

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self._data]})"


@dataclass(frozen=True)
class HnfResult:
    """A = vstack(H, B) @ Q with H lower-triangular and Q unimodular."""

    H: IntMatrix
    B: IntMatrix
    Q: IntMatrix


@dataclass(frozen=True)
class SnfResult:
    """A = P @ D @ Q where D carries the invariant factors S on its diagonal.

    S holds the positive invariant factors only, so len(S) equals rank(A).
    P and Q are unimodular.
    """

    S: tuple
    P: IntMatrix
    Q: IntMatrix

    def diagonal_matrix(self, rows: int, cols: int) -> IntMatrix:
        d = [[0] * cols for _ in range(rows)]
        for i, s in enumerate(self.S):
            d[i][i] = s
        return IntMatrix(d, cols=cols)


@dataclass(frozen=True)
class MinorStats:
    """Extremes and gcd/lcm of the nonzero k x k minors of a matrix."""

    delta_max: int
    delta_gcd: int
    delta_lcm: int
    order: int


def det(a: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    if a.rows != a.cols:
        raise ValueError("determinant needs a square matrix")
    n = a.rows
    m = a.tolists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def adjugate(a: IntMatrix) -> IntMatrix:
    """Adjugate matrix: a @ adjugate(a) == det(a) * I, exactly."""
    if a.rows != a.cols:
        raise ValueError("adjugate needs a square matrix")
    n = a.rows
    if n == 1:
        return IntMatrix([[1]])
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        rows = [r for r in range(n) if r != i]
        for j in range(n):
            cols = [c for c in range(n) if c != j]
            minor = IntMatrix([[a[r, c] for c in cols] for r in rows])
            out[j][i] = (-1) ** (i + j) * det(minor)
    return IntMatrix(out)


def rank(a: IntMatrix) -> int:
    """Rank over the rationals, by exact Gaussian elimination."""
    m = [[Fraction(x) for x in a.row(i)] for i in range(a.rows)]
    nrows, ncols = a.rows, a.cols
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == nrows:
            break
    return r


def solve_square(a: IntMatrix, rhs):
    """Solve a @ x = rhs for square integer a; returns Fractions or None if singular.

    Uses Cramer's rule on Bareiss determinants, so everything stays integral
    until the final division.
    """
    if a.rows != a.cols:
        raise ValueError("solve_square needs a square matrix")
    d = det(a)
    if d == 0:
        return None
    rhs = list(rhs)
    n = a.rows
    out = []
    for j in range(n):
        out.append(Fraction(det(a.replace_column(j, rhs)), d))
    return tuple(out)


def fraction_inverse(a: IntMatrix):
    """Exact inverse as rows of Fractions; None if singular."""
    d = det(a)
    if d == 0:
        return None
    adj = adjugate(a)
    return tuple(
        tuple(Fraction(adj[i, j], d) for j in range(a.cols)) for i in range(a.rows)
    )


def unimodular_inverse(a: IntMatrix) -> IntMatrix:
    """Integral inverse of a unimodular matrix."""
    d = det(a)
    if d not in (1, -1):
        raise NotUnimodular(f"determinant is {d}, expected +-1")
    adj = adjugate(a)
    if d == 1:
        return adj
    return -adj


def orthogonal_vector(a: IntMatrix):
    """Primitive integer vector orthogonal to the d-1 columns of a d x (d-1) matrix.

    Computed from signed maximal minors; returns the zero vector when the
    columns do not have full rank. For d = 1 (no columns) returns (1,).
    """
    d = a.rows
    if d == 1:
        return (1,)
    if a.cols != d - 1:
        raise ValueError("expected a d x (d-1) matrix")
    v = []
    for i in range(d):
        rows = [r for r in range(d) if r != i]
        v.append((-1) ** i * det(a.take_rows(rows)))
    g = math.gcd(*v)
    if g > 1:
        v = [x // g for x in v]
    return tuple(v)


def _col_addmul(w, v, j: int, i: int, q: int):
    """Column op col_j -= q * col_i applied to work matrix and transform."""
    if q == 0:
        return
    for r in w:
        r[j] -= q * r[i]
    for r in v:
        r[j] -= q * r[i]


def _col_swap(w, v, j: int, i: int):
    for r in w:
        r[j], r[i] = r[i], r[j]
    for r in v:
        r[j], r[i] = r[i], r[j]


def _col_negate(w, v, j: int):
    for r in w:
        r[j] = -r[j]
    for r in v:
        r[j] = -r[j]


def _hnf_engine(a: IntMatrix, npiv: int):
    """Column-reduce a so that rows 0..npiv-1 become lower triangular.

    Returns (W, V) as nested lists with a @ V == W, V unimodular, pivots
    positive and entries left of each pivot reduced into [0, pivot).
    Raises RankDeficient when row i cannot produce a pivot, which happens
    exactly when rows 0..i of a are linearly dependent.
    """
    m, n = a.rows, a.cols
    w = a.tolists()
    v = IntMatrix.identity(n).tolists()
    for i in range(npiv):
        # Euclidean reduction across columns i..n-1 of row i
        while True:
            nz = [j for j in range(i, n) if w[i][j] != 0]
            if not nz:
                raise RankDeficient(f"no pivot available for row {i}")
            jmin = min(nz, key=lambda j: abs(w[i][j]))
            if jmin != i:
                _col_swap(w, v, jmin, i)
            done = True
            for j in range(i + 1, n):
                if w[i][j] != 0:
                    q = w[i][j] // w[i][i]
                    _col_addmul(w, v, j, i, q)
                    if w[i][j] != 0:
                        done = False
            if done:
                break
        if w[i][i] < 0:
            _col_negate(w, v, i)
        for j in range(i):
            _col_addmul(w, v, j, i, w[i][j] // w[i][i])
    return w, v


def hnf(a: IntMatrix) -> HnfResult:
    """Hermite normal form decomposition a = vstack(H, B) @ Q.

    H is n x n lower-triangular with positive diagonal and off-diagonal
    entries in [0, H_ii); Q is unimodular. The decomposition requires the
    leading n x n block of a to be nonsingular (equivalently, every prefix
    of rows to be independent); RankDeficient is raised otherwise.
    """
    m, n = a.rows, a.cols
    if m < n:
        raise RankDeficient("need at least as many rows as columns")
    w, v = _hnf_engine(a, n)
    h = IntMatrix(w[:n])
    b = IntMatrix(w[n:], cols=n)
    q = unimodular_inverse(IntMatrix(v))
    return HnfResult(H=h, B=b, Q=q)


def row_hnf(a: IntMatrix):
    """Column-style HNF of a full-row-rank wide matrix: a @ Q = (H | 0).

    Returns (H, Q) with H k x k lower-triangular positive and Q n x n
    unimodular. Raises RankDeficient when rank(a) < a.rows.
    """
    k, n = a.rows, a.cols
    if k > n:
        raise RankDeficient("need at least as many columns as rows")
    w, v = _hnf_engine(a, k)
    h = IntMatrix([w[i][:k] for i in range(k)])
    return h, IntMatrix(v)


def _row_addmul(w, p, i: int, j: int, c: int):
    """Row op row_i += c * row_j on w; P gets col_j -= c * col_i."""
    if c == 0:
        return
    n = len(w[0])
    for t in range(n):
        w[i][t] += c * w[j][t]
    for r in p:
        r[j] -= c * r[i]


def _row_swap(w, p, i: int, j: int):
    w[i], w[j] = w[j], w[i]
    for r in p:
        r[i], r[j] = r[j], r[i]


def _row_negate(w, p, i: int):
    n = len(w[0])
    for t in range(n):
        w[i][t] = -w[i][t]
    for r in p:
        r[i] = -r[i]


def snf(a: IntMatrix) -> SnfResult:
    """Smith normal form with both transforms: a = P @ D @ Q.

    The returned S lists the positive invariant factors (length = rank);
    each divides the next and their partial products equal the gcds of the
    corresponding-order minors.
    """
    m, n = a.rows, a.cols
    w = a.tolists()
    p = IntMatrix.identity(m).tolists()
    q = IntMatrix.identity(n).tolists()

    def col_addmul(j, i, c):
        # W col_j += c * col_i ; Q row_i -= c * row_j
        if c == 0:
            return
        for r in w:
            r[j] += c * r[i]
        q[i] = [x - c * y for x, y in zip(q[i], q[j])]

    def col_swap(j, i):
        for r in w:
            r[j], r[i] = r[i], r[j]
        q[j], q[i] = q[i], q[j]

    def col_negate(j):
        for r in w:
            r[j] = -r[j]
        q[j] = [-x for x in q[j]]

    s = []
    t = 0
    limit = min(m, n)
    while t < limit:
        # pick the nonzero entry of smallest magnitude as pivot
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if w[i][j] != 0 and (best is None or abs(w[i][j]) < abs(w[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        if bi != t:
            _row_swap(w, p, bi, t)
        if bj != t:
            col_swap(bj, t)
        while True:
            # clear column t below the pivot
            dirty = False
            for i in range(t + 1, m):
                if w[i][t] != 0:
                    qq = w[i][t] // w[t][t]
                    _row_addmul(w, p, i, t, -qq)
                    if w[i][t] != 0:
                        _row_swap(w, p, i, t)
                        dirty = True
            if dirty:
                continue
            # clear row t right of the pivot
            for j in range(t + 1, n):
                if w[t][j] != 0:
                    qq = w[t][j] // w[t][t]
                    col_addmul(j, t, -qq)
                    if w[t][j] != 0:
                        col_swap(j, t)
                        dirty = True
            if dirty:
                continue
            # divisibility: pivot must divide the rest of the block
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if w[i][j] % w[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            _row_addmul(w, p, t, offender, 1)
        if w[t][t] < 0:
            _row_negate(w, p, t)
        s.append(w[t][t])
        t += 1

    return SnfResult(S=tuple(s), P=IntMatrix(p), Q=IntMatrix(q))


def delta_stats(a: IntMatrix, k: int) -> MinorStats:
    """Exhaustive statistics over all k x k minors (desk-scale diagnostic).

    When every k-minor vanishes, all three statistics are reported as 0.
    """
    if not (1 <= k <= min(a.rows, a.cols)):
        raise ValueError("minor order out of range")
    dmax = 0
    dgcd = 0
    dlcm = 1
    seen_nonzero = False
    for ridx in combinations(range(a.rows), k):
        sub = a.take_rows(ridx)
        for cidx in combinations(range(a.cols), k):
            d = abs(det(sub.take_columns(cidx)))
            if d == 0:
                continue
            seen_nonzero = True
            dmax = max(dmax, d)
            dgcd = math.gcd(dgcd, d)
            dlcm = math.lcm(dlcm, d)
    if not seen_nonzero:
        return MinorStats(0, 0, 0, k)
    return MinorStats(dmax, dgcd, dlcm, k)
