"""JSON interchange for algebras and operators.

Algebra files:
    { "dim": n, "field_sqrt": d,
      "brackets": [ { "i": 2, "j": 3, "out": { "1": "1" } }, ... ] }
with 1-based indices, i < j only; the skew completion is implied and
omitted pairs are zero.  Coefficients are scalar strings.

Operator files:
    { "dim": n, "field_sqrt": d, "g": [[...]], "omega": [[...]],
      "params": ["alpha", ...] }
with g and omega given entrywise as scalar/polynomial strings.

Both formats round-trip exactly over Q and Q(sqrt(d)).
"""

from __future__ import annotations

import json
from typing import List

from .errors import ParseError
from .lie import LieAlgebra
from .operators import PolyOperator, field_ring
from .scalars import Scalar, parse_scalar


def algebra_to_dict(g: LieAlgebra) -> dict:
    brackets = []
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            out = {
                str(k + 1): str(g.c[i][j][k])
                for k in range(g.dim)
                if g.c[i][j][k]
            }
            if out:
                brackets.append({"i": i + 1, "j": j + 1, "out": out})
    return {"dim": g.dim, "field_sqrt": g.field_tag(), "brackets": brackets}


def algebra_from_dict(data: dict) -> LieAlgebra:
    try:
        dim = int(data["dim"])
        raw = data.get("brackets", [])
        brackets = {}
        for item in raw:
            i, j = int(item["i"]) - 1, int(item["j"]) - 1
            if not (0 <= i < j < dim):
                raise ParseError(f"bracket pair ({item['i']},{item['j']}) out of range")
            out = {}
            for k, val in item["out"].items():
                kk = int(k) - 1
                if not 0 <= kk < dim:
                    raise ParseError(f"bracket output index {k} out of range")
                out[kk] = parse_scalar(str(val))
            brackets[(i, j)] = out
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed algebra data: {exc}") from exc
    return LieAlgebra.from_brackets(dim, brackets)


def load_algebra(path: str) -> LieAlgebra:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    return algebra_from_dict(data)


def dump_algebra(g: LieAlgebra, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(algebra_to_dict(g), fh, indent=2)
        fh.write("\n")


def operator_to_dict(op: PolyOperator) -> dict:
    params = [op.ring.names[i] for i in op.ring.param_indices()]
    return {
        "dim": op.n,
        "field_sqrt": op.ring.d,
        "g": [[str(x) for x in row] for row in op.g],
        "omega": [[str(x) for x in row] for row in op.omega],
        "params": params,
    }


def operator_from_dict(data: dict) -> PolyOperator:
    try:
        dim = int(data["dim"])
        d = int(data.get("field_sqrt", 0))
        params = [str(p) for p in data.get("params", [])]
        ring = field_ring(dim, params, d=d)
        g = [[ring.parse(str(x)) for x in row] for row in data["g"]]
        omega = [[ring.parse(str(x)) for x in row] for row in data["omega"]]
        if len(g) != dim or len(omega) != dim:
            raise ParseError("matrix size disagrees with dim")
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed operator data: {exc}") from exc
    return PolyOperator(ring, g, omega)


def load_operator(path: str) -> PolyOperator:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    return operator_from_dict(data)


def dump_operator(op: PolyOperator, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(operator_to_dict(op), fh, indent=2)
        fh.write("\n")


def load_matrix(path: str) -> List[List[Scalar]]:
    """A bare matrix file: JSON list of rows of scalar strings/numbers."""
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON: {exc.msg}") from exc
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ParseError(f"{path}: expected a JSON list of rows")
    return [[parse_scalar(str(x)) for x in row] for row in data]


def space_to_dict(basis) -> dict:
    return {
        "dim": len(basis),
        "basis": [[[str(x) for x in row] for row in mat] for mat in basis],
    }
