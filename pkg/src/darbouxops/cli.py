"""Command-line interface.

Commands: check, spaces, operator build|verify|apply|transform, pencil,
catalog list|show|verify.  JSON is the canonical interchange format; the
--format flag switches the report style (text, json, latex).  Exit codes
are deterministic functions of the computed report.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import List, Optional

from . import catalog as catalog_mod
from . import invariants, io_json, latexout, lie, pencil
from . import operators as ops
from .errors import (
    DarbouxOpsError,
    InvalidOperandError,
    MetricIncompatibleError,
    NotACocycleError,
    NotALieAlgebraError,
    ParseError,
)
from .poly import PolyRing
from .scalars import validate_field_tag

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2


@dataclass(frozen=True)
class SessionConfig:
    """Global run settings: extension tag, output format, verbosity, seed."""

    field_sqrt: int = 0
    format: str = "text"
    verbose: bool = False
    seed: int = 0

    @staticmethod
    def from_args(args) -> "SessionConfig":
        return SessionConfig(
            field_sqrt=validate_field_tag(args.field_sqrt or 0),
            format=args.format,
            verbose=args.verbose,
            seed=args.seed,
        )


def _emit(args, payload: dict, text_lines: List[str], latex: Optional[str] = None) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    elif args.format == "latex" and latex is not None:
        print(latex)
    else:
        for line in text_lines:
            print(line)


def cmd_check(args) -> int:
    try:
        g = io_json.load_algebra(args.algebra)
    except NotALieAlgebraError as exc:
        print(f"not a Lie algebra: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (ParseError, OSError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    tags = lie.structure_tags(g)
    cas = invariants.quadratic_casimir_space(g)
    met = invariants.compatible_metric_space(g)
    coc = invariants.two_cocycle_space(g)
    words = []
    if tags.abelian:
        words.append("abelian")
    if tags.semisimple:
        words.append("semisimple")
    if tags.nilpotent and not tags.abelian:
        words.append(f"nilpotent (class {tags.nilpotency_class})")
    elif tags.solvable and not tags.abelian:
        words.append("solvable")
    payload = {
        "valid": True,
        "dim": g.dim,
        "tags": {
            "abelian": tags.abelian,
            "nilpotent": tags.nilpotent,
            "nilpotency_class": tags.nilpotency_class,
            "solvable": tags.solvable,
            "semisimple": tags.semisimple,
            "center_dim": tags.center_dim,
        },
        "dims": {"casimirs": cas.dim, "metrics": met.dim, "cocycles": coc.dim},
    }
    _emit(args, payload, [
        f"valid Lie algebra, dim {g.dim}: {', '.join(words) or 'generic'},"
        f" center {tags.center_dim}",
        f"space dims: casimirs {cas.dim}, metrics {met.dim}, cocycles {coc.dim}",
    ])
    return EXIT_OK


def cmd_spaces(args) -> int:
    try:
        g = io_json.load_algebra(args.algebra)
    except (ParseError, OSError, NotALieAlgebraError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    which = args.which
    if which == "casimirs":
        space = invariants.quadratic_casimir_space(g)
    elif which == "metrics":
        space = invariants.compatible_metric_space(g)
    else:
        space = invariants.two_cocycle_space(g)
    payload = io_json.space_to_dict(space.basis)
    lines = [f"{which}: dim {space.dim}"]
    if which in ("casimirs", "metrics"):
        witness = invariants.nondegenerate_witness(space.basis)
        if witness is None:
            payload["witness"] = None
            lines.append("no nondegenerate witness")
        else:
            payload["witness"] = {
                "point": list(witness[0]),
                "matrix": [[str(x) for x in row] for row in witness[1]],
            }
            lines.append(f"nondegenerate witness at parameter point {witness[0]}")
    if which == "cocycles":
        payload["coboundary_dim"] = len(space.coboundary_basis)
        payload["h2_dim"] = space.h2_dim
        lines.append(f"coboundaries: dim {len(space.coboundary_basis)}, H2 dim {space.h2_dim}")
    for k, mat in enumerate(space.basis, start=1):
        lines.append(f"basis[{k}]:")
        for row in mat:
            lines.append("  [" + ", ".join(str(x) for x in row) + "]")
    return_latex = latexout.space_latex(space.basis)
    _emit(args, payload, lines, return_latex)
    return EXIT_OK


_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def _block_params(text: str, dim: int) -> List[str]:
    names = []
    for tok in _IDENT.findall(text):
        if tok == "sqrt" or tok == "I" or tok == "zero":
            continue
        if re.fullmatch(r"u\d+", tok) and int(tok[1:]) <= dim:
            continue
        if tok not in names:
            names.append(tok)
    return names


def _parse_block(ring: PolyRing, text: str, n: int, kind: str):
    text = text.strip()
    if text == "zero":
        return [[ring.zero for _ in range(n)] for _ in range(n)]
    if text == "I" or text.endswith("*I"):
        coeff = ring.one if text == "I" else ring.parse(text[:-2])
        return [[coeff if i == j else ring.zero for j in range(n)] for i in range(n)]
    rows = [r for r in text.split(";") if r.strip()]
    if len(rows) != n:
        raise ParseError(f"{kind} needs {n} rows, got {len(rows)}")
    return [[ring.parse(x) for x in row.split(",")] for row in rows]


def cmd_operator(args) -> int:
    if args.op_command == "build":
        try:
            g = io_json.load_algebra(args.algebra)
            params = _block_params(args.eta, g.dim) + [
                p for p in _block_params(args.f, g.dim) if p not in _block_params(args.eta, g.dim)
            ]
            d = g.field_tag() or (args.field_sqrt or 0)
            ring = ops.field_ring(g.dim, params, d=validate_field_tag(d))
            eta = _parse_block(ring, args.eta, g.dim, "eta")
            f = _parse_block(ring, args.f, g.dim, "f")
        except (ParseError, OSError, NotALieAlgebraError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PARSE
        try:
            op = ops.DarbouxOperator(ring, g.c, eta, f)
        except (MetricIncompatibleError, NotACocycleError) as exc:
            print(f"rejected: {exc}", file=sys.stderr)
            return EXIT_FAIL
        data = io_json.operator_to_dict(op.to_poly_operator())
        out = json.dumps(data, indent=2)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(out + "\n")
        else:
            print(out)
        return EXIT_OK

    try:
        op = io_json.load_operator(args.operator)
    except (ParseError, OSError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    if args.op_command == "verify":
        mode = args.mode
        fidx = op.ring.field_indices()
        affine = all(e.degree_on(fidx) <= 1 for row in op.omega for e in row)
        reports = {}
        if mode in ("auto", "both", "darboux") and affine:
            reports["darboux"] = ops.verify_darboux(pencil.darboux_view(op))
        if mode in ("auto", "both", "general") or not affine:
            reports["general"] = ops.verify_hamiltonian(op)
        if mode == "darboux" and not affine:
            print("error: omega is not affine in u, no Darboux form", file=sys.stderr)
            return EXIT_FAIL
        passed = all(r.passed for r in reports.values())
        payload = {name: r.as_dict() for name, r in reports.items()}
        lines = []
        for name, rep in reports.items():
            lines.append(f"{name}: {'PASS' if rep.passed else 'FAIL'}")
            for cond in rep.conditions:
                mark = "ok " if cond.ok else "BAD"
                where = "" if cond.first_violation is None else f" at {cond.first_violation}"
                lines.append(f"  [{mark}] {cond.name}{where}")
                if args.verbose and cond.residual:
                    lines.append(f"        residual: {cond.residual}")
        _emit(args, payload, lines)
        return EXIT_OK if passed else EXIT_FAIL

    if args.op_command == "apply":
        try:
            h = ops.parse_density(op, args.density)
        except DarbouxOpsError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PARSE
        v, w = ops.apply_to_density(op, h)
        payload = {
            "V": [[str(x) for x in row] for row in v],
            "W": [str(x) for x in w],
        }
        lines = []
        for i in range(op.n):
            terms = []
            for k in range(op.n):
                if v[i][k]:
                    terms.append(f"({v[i][k]})*u{k + 1}_x")
            if w[i]:
                terms.append(f"({w[i]})")
            rhs = " + ".join(terms) if terms else "0"
            lines.append(f"u{i + 1}_t = {rhs}")
        _emit(args, payload, lines)
        return EXIT_OK

    if args.op_command == "transform":
        try:
            a = io_json.load_matrix(args.matrix)
        except (ParseError, OSError) as exc:
            print(f"parse error: {exc}", file=sys.stderr)
            return EXIT_PARSE
        try:
            new_op = ops.transform_poly_operator(op, a)
        except DarbouxOpsError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_FAIL
        data = io_json.operator_to_dict(new_op)
        out = json.dumps(data, indent=2)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(out + "\n")
        else:
            print(out)
        return EXIT_OK

    raise AssertionError(f"unhandled operator command {args.op_command}")


def cmd_pencil(args) -> int:
    try:
        a = io_json.load_operator(args.a)
        b = io_json.load_operator(args.b)
        a, b = pencil.unify_operators(a, b)
    except (ParseError, OSError, DarbouxOpsError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    fidx = a.ring.field_indices()
    affine = all(
        e.degree_on(fidx) <= 1 for op in (a, b) for row in op.omega for e in row
    )
    payload = {}
    lines = []
    verdicts = []
    try:
        if args.mode in ("darboux", "both"):
            if not affine:
                print("error: darboux mode needs affine omega on both operands", file=sys.stderr)
                return EXIT_FAIL
            rep = pencil.pencil_compatible_darboux(pencil.darboux_view(a), pencil.darboux_view(b))
            payload["darboux"] = rep.as_dict()
            verdicts.append(rep.compatible)
            lines.append(f"darboux criterion: {'compatible' if rep.compatible else 'NOT compatible'}")
            for cond in rep.conditions:
                mark = "ok " if cond.ok else "BAD"
                where = "" if cond.first_violation is None else f" at {cond.first_violation}"
                lines.append(f"  [{mark}] {cond.name}{where}")
        if args.mode in ("lambda", "both"):
            rep = pencil.pencil_compatible_general(a, b)
            payload["lambda"] = rep.as_dict()
            verdicts.append(rep.compatible)
            lines.append(f"lambda criterion: {'compatible' if rep.compatible else 'NOT compatible'}")
    except InvalidOperandError as exc:
        print(f"INVALID_OPERAND: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(args, payload, lines)
    return EXIT_OK if all(verdicts) else EXIT_FAIL


def cmd_catalog(args) -> int:
    if args.cat_command == "list":
        names = catalog_mod.catalog_list()
        _emit(args, {"entries": names}, names)
        return EXIT_OK
    if args.cat_command == "show":
        try:
            entry = catalog_mod.catalog_get(args.name)
        except DarbouxOpsError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PARSE
        payload = {
            "name": entry.name,
            "algebra": entry.algebra_name,
            "structure": entry.structure,
            "dim": entry.dim,
            "eta": [[str(x) for x in row] for row in entry.eta],
            "omega": [[str(x) for x in row] for row in entry.omega],
            "eta_params": entry.eta_params,
            "f_params": entry.f_params,
            "moduli": {k: str(v) for k, v in entry.moduli.items()},
            "source": entry.source,
            "notes": entry.notes,
        }
        lines = [
            f"{entry.name}: algebra {entry.algebra_name} ({entry.structure}), dim {entry.dim}",
            f"metric family parameters: {', '.join(entry.eta_params)}",
            f"cocycle family parameters: {', '.join(entry.f_params)}",
        ]
        if entry.moduli:
            lines.append(
                "moduli: " + ", ".join(f"{k} (instantiated at {v})" for k, v in entry.moduli.items())
            )
        lines.append("eta:")
        for row in entry.eta:
            lines.append("  [" + ", ".join(str(x) for x in row) + "]")
        lines.append("omega:")
        for row in entry.omega:
            lines.append("  [" + ", ".join(str(x) for x in row) + "]")
        for note in entry.notes:
            lines.append(f"note: {note}")
        _emit(args, payload, lines, latexout.operator_latex(entry.eta, entry.omega))
        return EXIT_OK

    # verify
    names = catalog_mod.catalog_list() if (args.all or not args.name) else [args.name]
    reports = []
    for name in names:
        try:
            reports.append(catalog_mod.verify_entry(name))
        except DarbouxOpsError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PARSE
    passed = sum(1 for r in reports if r.passed)
    failed = [r for r in reports if not r.passed]
    flagged = [r for r in reports if r.flags]
    payload = {
        "entries": len(reports),
        "passed": passed,
        "failed": [r.name for r in failed],
        "flagged": {r.name: r.flags for r in flagged},
        "checks": {r.name: [[label, ok] for label, ok in r.checks] for r in reports},
    }
    lines = []
    for r in reports:
        status = "PASS" if r.passed else f"FAIL ({', '.join(r.failed())})"
        suffix = "  [flagged]" if r.flags else ""
        lines.append(f"{r.name:10s} {status}{suffix}")
        for flag in r.flags:
            lines.append(f"    flag: {flag}")
    lines.append(f"summary: {passed}/{len(reports)} passed, {len(flagged)} flagged")
    _emit(args, payload, lines)
    return EXIT_OK if not failed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="darbouxops",
        description="Exact toolkit for 1+0 hydrodynamic Hamiltonian operators in Darboux form.",
        allow_abbrev=False,
    )
    parser.add_argument("--format", choices=["text", "json", "latex"], default="text")
    parser.add_argument("--field-sqrt", type=int, default=0, metavar="D",
                        help="declared quadratic extension tag for built outputs")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized workflows (CLI commands are deterministic)")
    parser.add_argument("-v", "--verbose", action="store_true",
                        help="include residual polynomials in failure reports")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", allow_abbrev=False, help="validate an algebra file and print structure tags")
    p.add_argument("algebra")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("spaces", allow_abbrev=False, help="print a solution-space basis")
    p.add_argument("algebra")
    p.add_argument("--which", choices=["casimirs", "metrics", "cocycles"], required=True)
    p.set_defaults(func=cmd_spaces)

    p = sub.add_parser("operator", allow_abbrev=False, help="build, verify, apply or transform operators")
    opsub = p.add_subparsers(dest="op_command", required=True)
    b = opsub.add_parser("build", allow_abbrev=False)
    b.add_argument("--algebra", required=True)
    b.add_argument("--eta", required=True, help='"zero", "I", "alpha*I" or "a,b;c,d" rows')
    b.add_argument("--f", required=True, help="same syntax as --eta")
    b.add_argument("--out")
    v = opsub.add_parser("verify", allow_abbrev=False)
    v.add_argument("operator")
    v.add_argument("--mode", choices=["auto", "darboux", "general", "both"], default="auto")
    a = opsub.add_parser("apply", allow_abbrev=False)
    a.add_argument("operator")
    a.add_argument("--density", required=True)
    t = opsub.add_parser("transform", allow_abbrev=False)
    t.add_argument("operator")
    t.add_argument("--matrix", required=True)
    t.add_argument("--out")
    p.set_defaults(func=cmd_operator)

    p = sub.add_parser("pencil", allow_abbrev=False, help="bi-Hamiltonian compatibility of two operators")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--mode", choices=["darboux", "lambda", "both"], default="both")
    p.set_defaults(func=cmd_pencil)

    p = sub.add_parser("catalog", allow_abbrev=False, help="list, show or verify the embedded catalog")
    catsub = p.add_subparsers(dest="cat_command", required=True)
    catsub.add_parser("list")
    s = catsub.add_parser("show")
    s.add_argument("name")
    v = catsub.add_parser("verify")
    v.add_argument("name", nargs="?")
    v.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_catalog)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    args.config = SessionConfig.from_args(args)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
