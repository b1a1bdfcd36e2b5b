"""Exact linear algebra over Q(sqrt(d)).

Matrices are plain lists of lists of Scalar.  Elimination is fraction-free
in Bareiss style (exact division by the previous pivot) with deterministic
first-nonzero pivoting, followed by exact back-substitution, so the reduced
form, pivot set and the derived nullspace bases are canonical.

A sparse row-insertion reducer backs the large solver systems; it produces
the same canonical reduced rows and is cross-checked against the dense path
in the test suite.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from .errors import ShapeMismatchError, SingularMatrixError
from .scalars import Scalar

Matrix = List[List[Scalar]]
Vector = List[Scalar]


def _as_scalar_rows(m: Sequence[Sequence]) -> Matrix:
    rows = [[Scalar.of(x) for x in row] for row in m]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ShapeMismatchError("ragged matrix")
    return rows


def identity(n: int) -> Matrix:
    return [[Scalar(1) if i == j else Scalar(0) for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> Matrix:
    return [[Scalar(0) for _ in range(c)] for _ in range(r)]


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)] if m else []


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise ShapeMismatchError("matrix product shape mismatch")
    bt = transpose(b)
    return [[_dot(row, col) for col in bt] for row in a]


def _dot(x: Sequence[Scalar], y: Sequence[Scalar]) -> Scalar:
    total = Scalar(0)
    for a, b in zip(x, y):
        if a and b:
            total = total + a * b
    return total


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return [_dot(row, v) for row in a]


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return len(a) == len(b) and all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb))
        for ra, rb in zip(a, b)
    )


def is_symmetric(m: Matrix) -> bool:
    n = len(m)
    return all(len(r) == n for r in m) and all(
        m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n)
    )


def is_skew(m: Matrix) -> bool:
    n = len(m)
    return (
        all(len(r) == n for r in m)
        and all(not m[i][i] for i in range(n))
        and all(m[i][j] == -m[j][i] for i in range(n) for j in range(i + 1, n))
    )


def rref(m: Sequence[Sequence]) -> Tuple[Matrix, Tuple[int, ...], int]:
    """Reduced row echelon form with pivot columns and rank.

    Forward elimination is fraction-free: after step k every entry is a
    minor of the input, and the division by the previous pivot is exact.
    Back-substitution then clears above the pivots and normalizes them to 1.
    """
    a = _as_scalar_rows(m)
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots: List[int] = []
    prev = Scalar(1)
    r = 0
    for col in range(ncols):
        pr = next((i for i in range(r, nrows) if a[i][col]), None)
        if pr is None:
            continue
        if pr != r:
            a[r], a[pr] = a[pr], a[r]
        pivot = a[r][col]
        for i in range(r + 1, nrows):
            ai = a[i][col]
            for j in range(ncols):
                a[i][j] = (pivot * a[i][j] - ai * a[r][j]) / prev
        prev = pivot
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    rank = r
    # exact back-substitution: normalize pivots, clear entries above them
    for k in range(rank - 1, -1, -1):
        col = pivots[k]
        inv = a[k][col].inverse()
        a[k] = [x * inv if x else x for x in a[k]]
        for i in range(k):
            f = a[i][col]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    for i in range(rank, nrows):
        a[i] = [Scalar(0)] * ncols
    return a, tuple(pivots), rank


def nullspace(m: Sequence[Sequence], ncols: int | None = None) -> List[Vector]:
    """Canonical kernel basis: one vector per free column, free entry 1."""
    rows = _as_scalar_rows(m)
    if ncols is None:
        if not rows:
            raise ShapeMismatchError("nullspace of empty matrix needs ncols")
        ncols = len(rows[0])
    if not rows:
        rows = [[Scalar(0)] * ncols]
    red, pivots, rank = rref(rows)
    piv_set = set(pivots)
    basis: List[Vector] = []
    for free in range(ncols):
        if free in piv_set:
            continue
        v = [Scalar(0)] * ncols
        v[free] = Scalar(1)
        for k, col in enumerate(pivots):
            v[col] = -red[k][free]
        basis.append(v)
    return basis


def det(m: Sequence[Sequence]) -> Scalar:
    """Fraction-free Bareiss determinant."""
    a = _as_scalar_rows(m)
    n = len(a)
    if any(len(r) != n for r in a):
        raise ShapeMismatchError("determinant of non-square matrix")
    if n == 0:
        return Scalar(1)
    sign = 1
    prev = Scalar(1)
    for k in range(n - 1):
        if not a[k][k]:
            pr = next((i for i in range(k + 1, n) if a[i][k]), None)
            if pr is None:
                return Scalar(0)
            a[k], a[pr] = a[pr], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev
            a[i][k] = Scalar(0)
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def inverse(m: Sequence[Sequence]) -> Matrix:
    a = _as_scalar_rows(m)
    n = len(a)
    if any(len(r) != n for r in a):
        raise ShapeMismatchError("inverse of non-square matrix")
    aug = [row + ident_row for row, ident_row in zip(a, identity(n))]
    red, pivots, rank = rref(aug)
    if rank < n or any(p >= n for p in pivots):
        raise SingularMatrixError("matrix is singular")
    return [row[n:] for row in red]


# -- sparse reducer for the big linear systems ---------------------------

SparseRow = Dict[int, Scalar]


def _reduce_row(row: SparseRow, pivots: Dict[int, SparseRow]) -> SparseRow:
    while row:
        c0 = min(row)
        piv = pivots.get(c0)
        if piv is None:
            inv = row[c0].inverse()
            return {c: v * inv for c, v in row.items()}
        f = row[c0]
        for c, v in piv.items():
            w = row.get(c)
            w = -f * v if w is None else w - f * v
            if w:
                row[c] = w
            elif c in row:
                del row[c]
    return {}


def sparse_rref(rows: Sequence[SparseRow]) -> Dict[int, SparseRow]:
    """Canonical reduced pivot rows (pivot -> normalized row)."""
    pivots: Dict[int, SparseRow] = {}
    for row in rows:
        red = _reduce_row({c: v for c, v in row.items() if v}, pivots)
        if red:
            pivots[min(red)] = red
    # full back-substitution so the pivot rows form the unique RREF
    for p in sorted(pivots, reverse=True):
        prow = pivots[p]
        for q, qrow in pivots.items():
            if q >= p or p not in qrow:
                continue
            f = qrow[p]
            for c, v in prow.items():
                w = qrow.get(c)
                w = -f * v if w is None else w - f * v
                if w:
                    qrow[c] = w
                elif c in qrow:
                    del qrow[c]
    return pivots


def sparse_nullspace(rows: Sequence[SparseRow], ncols: int) -> List[Vector]:
    pivots = sparse_rref(rows)
    basis: List[Vector] = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [Scalar(0)] * ncols
        v[free] = Scalar(1)
        for p, prow in pivots.items():
            coeff = prow.get(free)
            if coeff:
                v[p] = -coeff
        basis.append(v)
    return basis
