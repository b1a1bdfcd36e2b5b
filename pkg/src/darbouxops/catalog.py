"""Catalog of verified operator families and its regression harness.

`catalog_get` materializes an embedded record into parsed polynomial
matrices, the extracted structure tensor and a concrete Lie algebra (the
modulus, if any, instantiated at the documented rational value).
`verify_entry` re-derives everything the record claims: skewness and
symmetry, the Jacobi identity, membership of the displayed eta and f
families in the computed solution spaces, the Darboux verification itself
(identically in all parameters), recomputed structure tags, parameter
counts against computed dimensions, and the Casimir/metric inversion on a
nondegenerate witness of the displayed metric family.

Mismatches listed in a record's `expect_flags` are reported as flags, not
failures; anything else failing is a regression.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List

from . import catalog_data, linalg
from .errors import UnknownEntryError
from .invariants import (
    casimir_residual,
    compatible_metric_space,
    nondegenerate_witness,
    quadratic_casimir_space,
    two_cocycle_space,
)
from .lie import LieAlgebra, structure_tags
from .operators import DarbouxOperator, PolyMatrix, field_ring, verify_darboux
from .poly import Poly, PolyRing
from .scalars import Scalar


def _parse_matrix(ring: PolyRing, text: str) -> PolyMatrix:
    rows = [r for r in text.split(";") if r.strip()]
    return [[ring.parse(e) for e in row.split(",")] for row in rows]


@dataclass
class CatalogEntry:
    name: str
    algebra_name: str
    structure: str
    dim: int
    ring: PolyRing
    eta: PolyMatrix
    omega: PolyMatrix  # zero-order family, constant offsets included
    c: list  # c[i][j][k], u-free polynomials (modulus may appear)
    fmat: PolyMatrix  # constant part of omega
    eta_params: List[str]
    f_params: List[str]
    moduli: Dict[str, Fraction]
    algebra: LieAlgebra  # modulus instantiated
    expected_tags: dict
    source: str
    notes: List[str] = field(default_factory=list)
    expect_flags: List[str] = field(default_factory=list)

    def operator(self) -> DarbouxOperator:
        return DarbouxOperator(self.ring, self.c, self.eta, self.fmat, _checked=True)


_cache: Dict[str, CatalogEntry] = {}


def catalog_list() -> List[str]:
    return [rec["name"] for rec in catalog_data.ENTRIES]


def _record(name: str) -> dict:
    for rec in catalog_data.ENTRIES:
        if rec["name"] == name:
            return rec
    raise UnknownEntryError(f"no catalog entry named {name!r}")


def catalog_get(name: str) -> CatalogEntry:
    if name in _cache:
        return _cache[name]
    rec = _record(name)
    n = rec["dim"]
    moduli = {k: Fraction(v) for k, v in rec.get("moduli", {}).items()}
    params = list(rec["eta_params"]) + list(rec["f_params"]) + list(moduli)
    ring = field_ring(n, params)
    eta = _parse_matrix(ring, rec["eta"])
    omega = _parse_matrix(ring, rec["omega"])
    if "fconst" in rec:
        fc = _parse_matrix(ring, rec["fconst"])
        omega = [[omega[i][j] + fc[i][j] for j in range(n)] for i in range(n)]
    fidx = ring.field_indices()
    c = [[[omega[i][j].coefficient_of_var(fidx[k]) for k in range(n)] for j in range(n)]
         for i in range(n)]
    fmat = [[omega[i][j].at_zero(fidx) for j in range(n)] for i in range(n)]
    subs = {name_: ring.const(Scalar(val)) for name_, val in moduli.items()}
    scalar_c = [
        [
            [
                (c[i][j][k].subs(subs) if moduli else c[i][j][k]).constant_value()
                for k in range(n)
            ]
            for j in range(n)
        ]
        for i in range(n)
    ]
    algebra = LieAlgebra(scalar_c)
    entry = CatalogEntry(
        name=rec["name"],
        algebra_name=rec["algebra"],
        structure=rec["structure"],
        dim=n,
        ring=ring,
        eta=eta,
        omega=omega,
        c=c,
        fmat=fmat,
        eta_params=list(rec["eta_params"]),
        f_params=list(rec["f_params"]),
        moduli=moduli,
        algebra=algebra,
        expected_tags=dict(rec.get("tags", {})),
        source=rec.get("source", ""),
        notes=list(rec.get("notes", [])),
        expect_flags=list(rec.get("expect_flags", [])),
    )
    _cache[name] = entry
    return entry


@dataclass
class EntryReport:
    name: str
    checks: List[tuple]  # (label, ok)
    flags: List[str]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def failed(self) -> List[str]:
        return [label for label, ok in self.checks if not ok]


def _tags_match(entry: CatalogEntry) -> tuple:
    """Compare recomputed structure tags with the catalogued expectations."""
    tags = structure_tags(entry.algebra)
    expected = entry.expected_tags
    problems = []
    for key in ("abelian", "solvable", "semisimple", "nilpotent"):
        if key in expected and getattr(tags, key) != expected[key]:
            problems.append(f"{key}={getattr(tags, key)} (expected {expected[key]})")
    if "nilpotency_class" in expected and tags.nilpotency_class != expected["nilpotency_class"]:
        problems.append(
            f"nilpotency_class={tags.nilpotency_class}"
            f" (expected {expected['nilpotency_class']})"
        )
    if "center_dim" in expected and tags.center_dim != expected["center_dim"]:
        problems.append(f"center_dim={tags.center_dim} (expected {expected['center_dim']})")
    if "split" in expected:
        n1, n2 = expected["split"]
        c = entry.algebra.c
        cross_ok = True
        for i in range(n1):
            for j in range(n1, n1 + n2):
                if any(c[i][j][k] for k in range(entry.dim)):
                    cross_ok = False
        if not cross_ok:
            problems.append("summands do not decouple at the catalogued split")
    return (not problems), problems


def verify_entry(name: str) -> EntryReport:
    entry = catalog_get(name)
    checks: List[tuple] = []
    flags: List[str] = list(entry.notes)

    rep = verify_darboux(entry.operator())
    for cond in rep.conditions:
        checks.append((cond.name, cond.ok))

    # displayed omega must be affine in u with u-free coefficients
    fidx = entry.ring.field_indices()
    affine = all(
        entry.omega[i][j].degree_on(fidx) <= 1 for i in range(entry.dim) for j in range(entry.dim)
    )
    checks.append(("omega-affine-in-u", affine))

    ok, problems = _tags_match(entry)
    if not ok and "structure-tags" in entry.expect_flags:
        flags.append(f"structure tags differ from the catalogued ones: {problems}")
        checks.append(("structure-tags(flagged)", True))
    else:
        checks.append(("structure-tags", ok))

    met = compatible_metric_space(entry.algebra)
    coc = two_cocycle_space(entry.algebra)
    cas = quadratic_casimir_space(entry.algebra)

    ok = len(entry.eta_params) == met.dim
    if not ok and "eta-param-count" in entry.expect_flags:
        flags.append(f"eta params {len(entry.eta_params)} != metric dim {met.dim}")
        checks.append(("eta-param-count(flagged)", True))
    else:
        checks.append(("eta-param-count", ok))

    ok = len(entry.f_params) == coc.dim
    if not ok and "f-param-count" in entry.expect_flags:
        flags.append(f"f params {len(entry.f_params)} != cocycle dim {coc.dim}")
        checks.append(("f-param-count(flagged)", True))
    else:
        checks.append(("f-param-count", ok))

    checks.append(("casimir-metric-dims-equal", cas.dim == met.dim))

    # nondegenerate witness of the displayed eta family; its inverse must be
    # a quadratic Casimir (the bijection direction the catalog relies on)
    directions = []
    for p in entry.eta_params:
        direction = [
            [entry.eta[i][j].coefficient_of_var(p) for j in range(entry.dim)]
            for i in range(entry.dim)
        ]
        subs = {m: entry.ring.const(Scalar(v)) for m, v in entry.moduli.items()}
        mat = [
            [
                (direction[i][j].subs(subs) if entry.moduli else direction[i][j]).constant_value()
                for j in range(entry.dim)
            ]
            for i in range(entry.dim)
        ]
        directions.append(mat)
    witness = nondegenerate_witness(directions)
    checks.append(("eta-family-nondegenerate", witness is not None))
    if witness is not None:
        inv = linalg.inverse(witness[1])
        checks.append(("eta-inverse-is-casimir", casimir_residual(entry.algebra.c, inv) is None))

    return EntryReport(entry.name, checks, flags)


@dataclass
class CatalogSummary:
    reports: List[EntryReport]

    @property
    def passed(self) -> int:
        return sum(1 for r in self.reports if r.passed)

    @property
    def failed(self) -> int:
        return sum(1 for r in self.reports if not r.passed)

    @property
    def flagged(self) -> int:
        return sum(1 for r in self.reports if r.flags)

    def all_passed(self) -> bool:
        return self.failed == 0


def verify_all() -> CatalogSummary:
    return CatalogSummary([verify_entry(name) for name in catalog_list()])
