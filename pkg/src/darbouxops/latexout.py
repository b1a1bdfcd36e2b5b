"""LaTeX export of matrices, operators and solution spaces.

Export only; JSON is the canonical interchange format.  Operators render
in the three-summand display eta d_x + linear part + constant part.
"""

from __future__ import annotations

from typing import List, Sequence

from .operators import PolyMatrix
from .poly import Poly
from .scalars import Scalar


def _cell(x) -> str:
    if isinstance(x, Poly):
        return x.latex()
    if isinstance(x, Scalar):
        return x.latex()
    return str(x)


def matrix_latex(m: Sequence[Sequence]) -> str:
    rows = [" & ".join(_cell(x) for x in row) for row in m]
    body = " \\\\\n".join(rows)
    return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}"


def operator_latex(eta: PolyMatrix, omega: PolyMatrix) -> str:
    """Three-summand display; omega is split into linear and constant parts."""
    n = len(omega)
    ring = omega[0][0].ring
    fidx = ring.field_indices()
    const = [[omega[i][j].at_zero(fidx) for j in range(n)] for i in range(n)]
    linear = [[omega[i][j] - const[i][j] for j in range(n)] for i in range(n)]
    pieces = [matrix_latex(eta) + "\\,\\partial_x"]
    if any(x for row in linear for x in row):
        pieces.append(matrix_latex(linear))
    if any(x for row in const for x in row):
        pieces.append(matrix_latex(const))
    return "\n+\n".join(pieces)


def space_latex(basis: List[Sequence[Sequence]], symbol: str = "t") -> str:
    """General element of the span, with one named parameter per basis matrix."""
    if not basis:
        return "\\varnothing"
    n = len(basis[0])
    k = len(basis)
    d = 0
    for mat in basis:
        for row in mat:
            for x in row:
                if isinstance(x, Scalar) and x.d:
                    d = x.d
    from .poly import PolyRing

    ring = PolyRing([], [f"{symbol}{m + 1}" for m in range(k)], d=d)
    general = [[ring.zero for _ in range(n)] for _ in range(n)]
    for m, mat in enumerate(basis):
        t = ring.var(f"{symbol}{m + 1}")
        for i in range(n):
            for j in range(n):
                if mat[i][j]:
                    general[i][j] = general[i][j] + ring.const(mat[i][j]) * t
    return matrix_latex(general)
