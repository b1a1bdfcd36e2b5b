"""Bi-Hamiltonian compatibility of pairs of 1+0 operators in Darboux form.

Two routes to the same verdict:

* the Darboux criterion: three mixed identities on the pair of triples,
  namely compatibility of the two brackets (mixed Jacobi), the mixed
  cocycle condition and the mixed metric condition;

* the lambda route: adjoin a fresh parameter lambda, form A + lambda B and
  run the general Hamiltonianity verifier; a pass must hold identically in
  lambda, the field variables and every other parameter.

Agreement of the two routes, order by order in lambda, is a tested
invariant of the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .errors import InvalidOperandError, ShapeMismatchError
from .operators import (
    DarbouxOperator,
    PolyOperator,
    VerificationReport,
    verify_darboux,
    verify_hamiltonian,
)
from .poly import Poly, PolyRing


@dataclass
class PencilReport:
    operand_a: Optional[VerificationReport]
    operand_b: Optional[VerificationReport]
    conditions: List  # ConditionResult-compatible entries from VerificationReport.add
    lambda_report: Optional[VerificationReport] = None

    @property
    def compatible(self) -> bool:
        ok = all(c.ok for c in self.conditions)
        if self.lambda_report is not None:
            ok = ok and self.lambda_report.passed
        return ok

    def as_dict(self) -> dict:
        return {
            "compatible": self.compatible,
            "conditions": [
                {
                    "name": c.name,
                    "ok": c.ok,
                    "first_violation": list(c.first_violation) if c.first_violation else None,
                }
                for c in self.conditions
            ],
            "lambda_check": None if self.lambda_report is None else self.lambda_report.as_dict(),
        }


def _require_common_ring(a: DarbouxOperator, b: DarbouxOperator) -> PolyRing:
    if a.ring != b.ring:
        raise ShapeMismatchError(
            "pencil operands must share one ring; use unify_operators first"
        )
    return a.ring


def mixed_jacobi_residual(c1, c2) -> Optional[tuple]:
    """Mixed Jacobi: sum_p c2^{ij}_p c1^{pk}_s + cyc + (1 <-> 2) = 0."""
    n = len(c1)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                for s in range(n):
                    tot = None
                    for p in range(n):
                        for x, y in (
                            (c2[i][j][p], c1[p][k][s]),
                            (c2[j][k][p], c1[p][i][s]),
                            (c2[k][i][p], c1[p][j][s]),
                            (c1[i][j][p], c2[p][k][s]),
                            (c1[j][k][p], c2[p][i][s]),
                            (c1[k][i][p], c2[p][j][s]),
                        ):
                            if x and y:
                                term = x * y
                                tot = term if tot is None else tot + term
                    if tot is not None and tot:
                        return (i, j, k, s)
    return None


def mixed_cocycle_residual(c1, f1, c2, f2) -> Optional[tuple]:
    """Mixed cocycle: c2 against f1 plus c1 against f2, cyclically."""
    n = len(c1)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                tot = None
                for p in range(n):
                    for x, y in (
                        (c2[i][j][p], f1[p][k]),
                        (c2[j][k][p], f1[p][i]),
                        (c2[k][i][p], f1[p][j]),
                        (c1[i][j][p], f2[p][k]),
                        (c1[j][k][p], f2[p][i]),
                        (c1[k][i][p], f2[p][j]),
                    ):
                        if x and y:
                            term = x * y
                            tot = term if tot is None else tot + term
                if tot is not None and tot:
                    return (i, j, k)
    return None


def mixed_metric_residual(g1, c1, g2, c2) -> Optional[tuple]:
    """Mixed metric: g1^{is} c2^{jk}_s + g1^{js} c2^{ik}_s + (1 <-> 2) = 0."""
    n = len(c1)
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                tot = None
                for s in range(n):
                    for x, y in (
                        (g1[i][s], c2[j][k][s]),
                        (g1[j][s], c2[i][k][s]),
                        (g2[i][s], c1[j][k][s]),
                        (g2[j][s], c1[i][k][s]),
                    ):
                        if x and y:
                            term = x * y
                            tot = term if tot is None else tot + term
                if tot is not None and tot:
                    return (i, j, k)
    return None


def pencil_compatible_darboux(a: DarbouxOperator, b: DarbouxOperator) -> PencilReport:
    """Darboux-form pencil criterion; both operands must verify on their own."""
    _require_common_ring(a, b)
    ra = verify_darboux(a)
    rb = verify_darboux(b)
    if not ra.passed or not rb.passed:
        raise InvalidOperandError(
            f"operands must be Hamiltonian before pairing: "
            f"A failed {ra.failed_names()}, B failed {rb.failed_names()}"
        )
    report = VerificationReport()
    report.add("mixed-jacobi", mixed_jacobi_residual(a.c, b.c))
    report.add("mixed-cocycle", mixed_cocycle_residual(a.c, a.f, b.c, b.f))
    report.add("mixed-metric", mixed_metric_residual(a.eta, a.c, b.eta, b.c))
    return PencilReport(ra, rb, report.conditions)


def pencil_operator(a: PolyOperator, b: PolyOperator, lam: str = "lam") -> PolyOperator:
    """A + lambda B over a ring extended by the pencil parameter."""
    if a.ring != b.ring:
        raise ShapeMismatchError("pencil operands must share one ring")
    if a.n != b.n:
        raise ShapeMismatchError("pencil operands disagree in dimension")
    ring = a.ring.extend_params([lam])
    lift = _ring_injector(a.ring, ring)
    lpoly = ring.var(lam)
    n = a.n
    g = [[lift(a.g[i][j]) + lpoly * lift(b.g[i][j]) for j in range(n)] for i in range(n)]
    om = [[lift(a.omega[i][j]) + lpoly * lift(b.omega[i][j]) for j in range(n)] for i in range(n)]
    return PolyOperator(ring, g, om, _checked=True)


def _ring_injector(src: PolyRing, dst: PolyRing):
    mapping = [dst.names.index(name) for name in src.names]
    pad = dst.nvars

    def inject(p: Poly) -> Poly:
        terms = {}
        for e, coeff in p.terms.items():
            exp = [0] * pad
            for pos, k in enumerate(e):
                if k:
                    exp[mapping[pos]] = k
            terms[tuple(exp)] = coeff
        return Poly(dst, terms)

    return inject


def pencil_compatible_general(a: PolyOperator, b: PolyOperator) -> PencilReport:
    """General Hamiltonianity check of A + lambda B, identically in lambda."""
    ra = verify_hamiltonian(a)
    rb = verify_hamiltonian(b)
    if not ra.passed or not rb.passed:
        raise InvalidOperandError(
            f"operands must be Hamiltonian before pairing: "
            f"A failed {ra.failed_names()}, B failed {rb.failed_names()}"
        )
    lam = "lam"
    existing = set(a.ring.names)
    while lam in existing:
        lam += "_"
    pen = pencil_operator(a, b, lam)
    lam_report = verify_hamiltonian(pen)
    return PencilReport(ra, rb, [], lambda_report=lam_report)


def pencil_compatible_both(a: DarbouxOperator, b: DarbouxOperator) -> Tuple[PencilReport, PencilReport]:
    darboux = pencil_compatible_darboux(a, b)
    general = pencil_compatible_general(a.to_poly_operator(), b.to_poly_operator())
    return darboux, general


def unify_operators(a: PolyOperator, b: PolyOperator) -> Tuple[PolyOperator, PolyOperator]:
    """Move two operators into one shared ring.

    Parameters of B that collide with parameters of A are renamed with a
    "_b" suffix so the mixed conditions treat the two families as
    independent.  Field tags must agree (or one must be plain Q).
    """
    if a.n != b.n:
        raise ShapeMismatchError("operators disagree in dimension")
    da, db = a.ring.d, b.ring.d
    if da and db and da != db:
        raise ShapeMismatchError(f"operators live over sqrt({da}) and sqrt({db})")
    d = da or db
    params_a = [a.ring.names[i] for i in a.ring.param_indices()]
    rename = {}
    taken = set(params_a) | set(a.ring.names)
    params_b = []
    for p in (b.ring.names[i] for i in b.ring.param_indices()):
        q = p
        while q in taken:
            q = q + "_b"
        rename[p] = q
        taken.add(q)
        params_b.append(q)
    fields = [a.ring.names[i] for i in a.ring.field_indices()]
    ring = PolyRing(fields, params_a + params_b, d=d)

    def mover(src: PolyRing, renames) -> "callable":
        mapping = [ring.names.index(renames.get(nm, nm)) for nm in src.names]

        def move(p: Poly) -> Poly:
            terms = {}
            for e, coeff in p.terms.items():
                exp = [0] * ring.nvars
                for pos, k in enumerate(e):
                    if k:
                        exp[mapping[pos]] = k
                terms[tuple(exp)] = coeff
            return Poly(ring, terms)

        return move

    ma = mover(a.ring, {})
    mb = mover(b.ring, rename)
    n = a.n
    a2 = PolyOperator(ring, [[ma(x) for x in r] for r in a.g],
                      [[ma(x) for x in r] for r in a.omega], _checked=True)
    b2 = PolyOperator(ring, [[mb(x) for x in r] for r in b.g],
                      [[mb(x) for x in r] for r in b.omega], _checked=True)
    return a2, b2


def darboux_view(op: PolyOperator) -> DarbouxOperator:
    """Reinterpret an affine-omega operator as a Darboux triple (unchecked)."""
    from .operators import extract_linear_parts

    c, f = extract_linear_parts(op)
    return DarbouxOperator(op.ring, c, op.g, f, _checked=True)
