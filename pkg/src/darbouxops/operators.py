"""Hamiltonian operators of type 1+0 with constant leading coefficient.

Two views of the same object:

* DarbouxOperator: a triple (structure tensor c, constant symmetric eta,
  constant skew f) so the zero-order part is omega = c.u + f.  The three
  defining identities (Jacobi, cocycle, metric compatibility) are checked
  exactly, identically in any formal parameters carried by the entries.

* PolyOperator: a constant symmetric g plus an arbitrary polynomial skew
  omega(u); the first-order Christoffel part is fixed to zero.  The general
  verifier checks skewness, the Schouten identity, cyclic symmetry of
  Phi^{ijk} = g^{is} d omega^{jk} / d u^s and constancy of Phi.

Verification never raises on a failing condition; failures land in the
returned report with the first violating index tuple and its residual.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from . import linalg
from .errors import (
    MetricIncompatibleError,
    NonHydrodynamicDensityError,
    NotACocycleError,
    ShapeMismatchError,
)
from .invariants import (
    cocycle_residual,
    jacobi_residual,
    metric_residual,
)
from .lie import LieAlgebra
from .poly import Poly, PolyRing
from .scalars import Scalar

PolyMatrix = List[List[Poly]]


def field_ring(n: int, params: Sequence[str] = (), d: int = 0) -> PolyRing:
    return PolyRing([f"u{i + 1}" for i in range(n)], params, d=d)


def _lift_entry(ring: PolyRing, x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, str):
        return ring.parse(x)
    return ring.const(Scalar.of(x))


def lift_matrix(ring: PolyRing, m: Sequence[Sequence]) -> PolyMatrix:
    return [[_lift_entry(ring, x) for x in row] for row in m]


def lift_tensor(ring: PolyRing, c: Sequence[Sequence[Sequence]]):
    return [[[_lift_entry(ring, x) for x in row] for row in plane] for plane in c]


def _poly_is_symmetric(m: PolyMatrix) -> bool:
    n = len(m)
    return all((m[i][j] - m[j][i]).is_zero() for i in range(n) for j in range(i + 1, n))


def _poly_is_skew(m: PolyMatrix) -> bool:
    n = len(m)
    if any(not m[i][i].is_zero() for i in range(n)):
        return False
    return all((m[i][j] + m[j][i]).is_zero() for i in range(n) for j in range(i + 1, n))


@dataclass
class ConditionResult:
    name: str
    ok: bool
    first_violation: Optional[tuple] = None
    residual: Optional[str] = None


@dataclass
class VerificationReport:
    conditions: List[ConditionResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.conditions)

    def add(self, name: str, violation: Optional[tuple], residual=None):
        self.conditions.append(
            ConditionResult(
                name,
                violation is None,
                violation,
                None if residual is None else str(residual),
            )
        )

    def failed_names(self) -> List[str]:
        return [c.name for c in self.conditions if not c.ok]

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "conditions": [
                {
                    "name": c.name,
                    "ok": c.ok,
                    "first_violation": list(c.first_violation) if c.first_violation else None,
                    "residual": c.residual,
                }
                for c in self.conditions
            ],
        }


class DarbouxOperator:
    """Validated triple (c, eta, f); omega = c.u + f."""

    __slots__ = ("ring", "n", "c", "eta", "f")

    def __init__(self, ring: PolyRing, c, eta, f, _checked=False):
        n = len(eta)
        cp = lift_tensor(ring, c)
        etap = lift_matrix(ring, eta)
        fp = lift_matrix(ring, f)
        if len(cp) != n or len(fp) != n:
            raise ShapeMismatchError("operator blocks disagree in dimension")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "c", cp)
        object.__setattr__(self, "eta", etap)
        object.__setattr__(self, "f", fp)
        if not _checked:
            report = verify_darboux(self)
            if not report.passed:
                bad = report.failed_names()
                if "metric-compatibility" in bad or "eta-symmetric" in bad:
                    raise MetricIncompatibleError(f"conditions failed: {bad}")
                if "cocycle" in bad or "f-skew" in bad:
                    raise NotACocycleError(f"conditions failed: {bad}")
                raise ShapeMismatchError(f"conditions failed: {bad}")

    def __setattr__(self, *_):
        raise AttributeError("DarbouxOperator is immutable")

    def omega(self) -> PolyMatrix:
        ring = self.ring
        uvars = [ring.var(ring.names[i]) for i in ring.field_indices()]
        out = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                entry = self.f[i][j]
                for k in range(self.n):
                    if self.c[i][j][k]:
                        entry = entry + self.c[i][j][k] * uvars[k]
                row.append(entry)
            out.append(row)
        return out

    def to_poly_operator(self) -> "PolyOperator":
        return PolyOperator(self.ring, self.eta, self.omega(), _checked=True)


def build_darboux(g: LieAlgebra, eta, f, params: Sequence[str] = ()) -> DarbouxOperator:
    """Validated Darboux operator from a Lie algebra and constant blocks.

    eta must solve the metric-compatibility equations of g and f must be a
    2-cocycle; violations raise METRIC_INCOMPATIBLE / NOT_A_COCYCLE.
    """
    ring = field_ring(g.dim, params, d=g.field_tag())
    return DarbouxOperator(ring, g.c, eta, f)


def verify_darboux(op) -> VerificationReport:
    """Check the three defining identities on a (c, eta, f) triple.

    Accepts a DarbouxOperator or any object with .c/.eta/.f poly entries;
    unvalidated triples are welcome, failures are reported not raised.
    """
    c, eta, f = op.c, op.eta, op.f
    n = len(eta)
    report = VerificationReport()
    skew_c = None
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                if not (c[i][j][k] + c[j][i][k]).is_zero():
                    skew_c = (i, j, k)
                    break
            if skew_c:
                break
        if skew_c:
            break
    report.add("c-skew", skew_c)
    report.add("eta-symmetric", _first_symmetry_violation(eta))
    report.add("f-skew", _first_skew_violation(f))
    if skew_c is None:
        viol = jacobi_residual(c)
        report.add("jacobi", viol, _jacobi_value(c, viol) if viol else None)
    else:
        report.add("jacobi", skew_c)
    viol = cocycle_residual(c, f)
    report.add("cocycle", viol)
    viol = metric_residual(c, eta)
    report.add("metric-compatibility", viol)
    return report


def _first_symmetry_violation(m: PolyMatrix) -> Optional[tuple]:
    n = len(m)
    for i in range(n):
        for j in range(i + 1, n):
            if not (m[i][j] - m[j][i]).is_zero():
                return (i, j)
    return None


def _first_skew_violation(m: PolyMatrix) -> Optional[tuple]:
    n = len(m)
    for i in range(n):
        if not m[i][i].is_zero():
            return (i, i)
        for j in range(i + 1, n):
            if not (m[i][j] + m[j][i]).is_zero():
                return (i, j)
    return None


def _jacobi_value(c, key):
    i, j, k, m = key
    tot = None
    for s in range(len(c)):
        for x, y in ((c[i][j][s], c[s][k][m]), (c[j][k][s], c[s][i][m]), (c[k][i][s], c[s][j][m])):
            if x and y:
                term = x * y
                tot = term if tot is None else tot + term
    return tot


class PolyOperator:
    """g d_x + omega(u) with g constant symmetric and b = 0."""

    __slots__ = ("ring", "n", "g", "omega")

    def __init__(self, ring: PolyRing, g, omega, _checked=False):
        n = len(g)
        gp = lift_matrix(ring, g)
        om = lift_matrix(ring, omega)
        field_idx = ring.field_indices()
        if len(om) != n:
            raise ShapeMismatchError("operator blocks disagree in dimension")
        if not _checked:
            for row in gp:
                for x in row:
                    if not x.at_zero(field_idx) == x:
                        raise ShapeMismatchError("leading coefficient must be constant in u")
            if not _poly_is_symmetric(gp):
                raise ShapeMismatchError("leading coefficient must be symmetric")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "g", gp)
        object.__setattr__(self, "omega", om)

    def __setattr__(self, *_):
        raise AttributeError("PolyOperator is immutable")


def phi_tensor(op: PolyOperator):
    """Phi^{ijk} = g^{is} d omega^{jk} / d u^s (b = 0)."""
    ring = op.ring
    n = op.n
    fidx = ring.field_indices()
    domega = [[[op.omega[j][k].partial(fidx[s]) for s in range(n)] for k in range(n)] for j in range(n)]
    phi = []
    for i in range(n):
        plane = []
        for j in range(n):
            row = []
            for k in range(n):
                tot = ring.zero
                for s in range(n):
                    if op.g[i][s] and domega[j][k][s]:
                        tot = tot + op.g[i][s] * domega[j][k][s]
                row.append(tot)
            plane.append(row)
        phi.append(plane)
    return phi


def schouten_residual(ring: PolyRing, omega: PolyMatrix) -> Optional[tuple]:
    """First (i, j, k) violating the Schouten-Jacobi identity for omega."""
    n = len(omega)
    fidx = ring.field_indices()
    domega = [[[omega[j][k].partial(fidx[s]) for s in range(n)] for k in range(n)] for j in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                tot = ring.zero
                for s in range(n):
                    for left, dright in (
                        (omega[i][s], domega[j][k][s]),
                        (omega[j][s], domega[k][i][s]),
                        (omega[k][s], domega[i][j][s]),
                    ):
                        if left and dright:
                            tot = tot + left * dright
                if not tot.is_zero():
                    return (i, j, k)
    return None


def verify_hamiltonian(op: PolyOperator) -> VerificationReport:
    """Hamiltonianity of g d_x + omega with constant symmetric g, b = 0.

    Conditions: omega skew; Schouten-Jacobi identity; Phi^{ijk} = Phi^{kij};
    Phi constant in u.  A pass means every identity holds identically in the
    field variables and all formal parameters.
    """
    report = VerificationReport()
    report.add("omega-skew", _first_skew_violation(op.omega))
    report.add("schouten", schouten_residual(op.ring, op.omega))
    phi = phi_tensor(op)
    n = op.n
    viol = None
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if not (phi[i][j][k] - phi[k][i][j]).is_zero():
                    viol = (i, j, k)
                    break
            if viol:
                break
        if viol:
            break
    report.add("phi-cyclic-symmetry", viol)
    fidx = op.ring.field_indices()
    viol = None
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for r in range(n):
                    if not phi[i][j][k].partial(fidx[r]).is_zero():
                        viol = (i, j, k, r)
                        break
                if viol:
                    break
            if viol:
                break
        if viol:
            break
    report.add("phi-constant", viol)
    return report


def apply_to_density(op: PolyOperator, h: Poly) -> Tuple[PolyMatrix, List[Poly]]:
    """Quasilinear system u^i_t = V^i_k(u) u^k_x + W^i(u) from a density h(u).

    V^i_k = g^{ij} d2h/du^j du^k and W^i = omega^{ij} dh/du^j.  The density
    must be hydrodynamic: a polynomial in the field variables (parameters
    are allowed as coefficients).
    """
    ring = op.ring
    if h.ring != ring:
        raise ShapeMismatchError("density lives in a different ring")
    n = op.n
    fidx = ring.field_indices()
    grad = [h.partial(fidx[j]) for j in range(n)]
    hess = [[grad[j].partial(fidx[k]) for k in range(n)] for j in range(n)]
    v = []
    w = []
    for i in range(n):
        vrow = []
        for k in range(n):
            tot = ring.zero
            for j in range(n):
                if op.g[i][j] and hess[j][k]:
                    tot = tot + op.g[i][j] * hess[j][k]
            vrow.append(tot)
        v.append(vrow)
        tot = ring.zero
        for j in range(n):
            if op.omega[i][j] and grad[j]:
                tot = tot + op.omega[i][j] * grad[j]
        w.append(tot)
    return v, w


def parse_density(op: PolyOperator, text: str) -> Poly:
    """Parse a hydrodynamic density; reject any non-field indeterminate."""
    try:
        h = op.ring.parse(text)
    except Exception as exc:
        raise NonHydrodynamicDensityError(
            f"density must be polynomial in the field variables: {exc}"
        ) from exc
    for idx in op.ring.param_indices():
        if h.depends_on(idx):
            raise NonHydrodynamicDensityError(
                f"density depends on parameter {op.ring.names[idx]!r}"
            )
    return h


def transform_darboux(op: DarbouxOperator, a: Sequence[Sequence],
                      validate: bool = True) -> DarbouxOperator:
    """Push forward along u~^i = a^i_l u^l; (2,0) law on eta, f, tensor law on c.

    With validate=False the result is returned unverified, which lets
    diagnostics transport failing triples and compare verdicts.
    """
    amat = [[Scalar.of(x) for x in row] for row in a]
    n = op.n
    if len(amat) != n or any(len(r) != n for r in amat):
        raise ShapeMismatchError("transformation matrix has wrong shape")
    b = linalg.inverse(amat)
    ring = op.ring
    ap = lift_matrix(ring, amat)
    bp = lift_matrix(ring, b)

    def two_tensor(m: PolyMatrix) -> PolyMatrix:
        out = [[ring.zero for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                tot = ring.zero
                for k in range(n):
                    if not ap[i][k]:
                        continue
                    for l in range(n):
                        if m[k][l] and ap[j][l]:
                            tot = tot + ap[i][k] * m[k][l] * ap[j][l]
                out[i][j] = tot
        return out

    eta_new = two_tensor(op.eta)
    f_new = two_tensor(op.f)
    c_new = [[[ring.zero for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                tot = ring.zero
                for l in range(n):
                    if not ap[i][l]:
                        continue
                    for m in range(n):
                        if not op.c[l][m] or not ap[j][m]:
                            continue
                        for s in range(n):
                            if op.c[l][m][s] and bp[s][k]:
                                tot = tot + ap[i][l] * ap[j][m] * op.c[l][m][s] * bp[s][k]
                c_new[i][j][k] = tot
    return DarbouxOperator(ring, c_new, eta_new, f_new, _checked=not validate)


def transform_poly_operator(op: PolyOperator, a: Sequence[Sequence]) -> PolyOperator:
    """(2,0) transport of a general operator, substituting u = a^{-1} u~."""
    amat = [[Scalar.of(x) for x in row] for row in a]
    n = op.n
    b = linalg.inverse(amat)
    ring = op.ring
    fnames = [ring.names[i] for i in ring.field_indices()]
    subs_map = {
        fnames[l]: sum(
            (ring.const(b[l][m]) * ring.var(fnames[m]) for m in range(n)), ring.zero
        )
        for l in range(n)
    }
    omega_sub = [[op.omega[k][l].subs(subs_map) for l in range(n)] for k in range(n)]
    ap = lift_matrix(ring, amat)
    g_new = [[ring.zero for _ in range(n)] for _ in range(n)]
    omega_new = [[ring.zero for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            tg = ring.zero
            to = ring.zero
            for k in range(n):
                if not ap[i][k]:
                    continue
                for l in range(n):
                    if ap[j][l]:
                        if op.g[k][l]:
                            tg = tg + ap[i][k] * op.g[k][l] * ap[j][l]
                        if omega_sub[k][l]:
                            to = to + ap[i][k] * omega_sub[k][l] * ap[j][l]
            g_new[i][j] = tg
            omega_new[i][j] = to
    return PolyOperator(ring, g_new, omega_new, _checked=True)


def operator_casimir_functionals(op: DarbouxOperator) -> List[linalg.Vector]:
    """Linear densities a_i u^i with c^{ij}_k a_j = 0 and f^{ij} a_j = 0."""
    n = op.n
    rows = []
    for i in range(n):
        for k in range(n):
            row = {}
            for j in range(n):
                val = op.c[i][j][k]
                if val:
                    row[j] = val.constant_value()
            if row:
                rows.append(row)
    for i in range(n):
        row = {}
        for j in range(n):
            val = op.f[i][j]
            if val:
                row[j] = val.constant_value()
        if row:
            rows.append(row)
    return linalg.sparse_nullspace(rows, n)


def extract_linear_parts(op: PolyOperator):
    """Split omega = c.u + f; raises if omega is not affine in u.

    Returns (c, f) with c[i][j][k] and f[i][j] u-free polynomials.
    """
    ring = op.ring
    n = op.n
    fidx = ring.field_indices()
    c = [[[ring.zero for _ in range(n)] for _ in range(n)] for _ in range(n)]
    fmat = [[ring.zero for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            entry = op.omega[i][j]
            if entry.degree_on(fidx) > 1:
                raise ShapeMismatchError(f"omega[{i}][{j}] is not affine in u")
            fmat[i][j] = entry.at_zero(fidx)
            for k in range(n):
                # affine in u, so the degree-1 coefficient is already u-free
                c[i][j][k] = entry.coefficient_of_var(fidx[k])
    return c, fmat
