"""Command-line front end.

Subcommands:

* ``prove {nonhopf,hopf,quadratic,type-b,all}`` -- replay a proof piece;
  exit 0 only when every trace reaches its expected verdict.
* ``check TENSOR CONDITION CONTEXT [name=value ...]`` -- emit the symbolic
  condition report, optionally after substituting assumptions.
* ``sweep FAMILY RMIN RMAX SAMPLES CONDITION`` -- numeric residual table
  over a radius grid.
* ``expr {eval,solve} TEXT [ARGS ...]`` -- exact expression utilities.

Reports exist in two formats (--format text|json); the json form is a
versioned envelope whose payload round-trips through the standard json
module unchanged.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import __version__
from .catalog import (
    Catalog,
    ConditionKind,
    DEFAULT_ORACLE_TOL,
    DEFAULT_WITNESS_TOL,
    builtin_catalog,
    load_catalog,
    sweep as run_sweep,
)
from .conditions import (
    einstein_equations,
    d_parallel_equations,
    parallel_equations,
    pseudo_parallel_equations,
    semi_parallel_equations,
    xi_parallel_equations,
)
from .frames import build_hopf_context, build_nonhopf_context, ricci, star_ricci_closed
from .parsing import parse_expr
from .proofs import (
    CH2,
    CP2,
    ProofError,
    hopf_branch,
    nonhopf_contradiction,
    quadratic_analysis,
    solve_quadratic,
    type_b_exclusion,
    verify_all,
)
from .rational import ExprError

SCHEMA = "starricci.report/1"


@dataclass
class Report:
    command: str
    status: str
    payload: dict
    catalog_version: Optional[int] = None
    text_lines: list = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "artifact_version": __version__,
            "catalog_version": self.catalog_version,
            "command": self.command,
            "status": self.status,
            "payload": self.payload,
        }

    def emit(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"
        head = [f"# {self.command}", f"status: {self.status}"]
        return "\n".join(head + self.text_lines) + "\n"


def _write(report: Report, args) -> None:
    text = report.emit(args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _catalog(args) -> Catalog:
    if getattr(args, "catalog", None):
        return load_catalog(args.catalog, oracle_tol=args.tol_oracle)
    return builtin_catalog()


# -- prove -------------------------------------------------------------------

def _trace_lines(trace) -> list:
    return trace.to_text().splitlines()


def cmd_prove(args) -> int:
    cat = _catalog(args)
    payload: dict = {}
    lines: list = []
    ok = True
    target = args.target
    try:
        if target in ("nonhopf", "all"):
            t = nonhopf_contradiction()
            payload["nonhopf"] = t.to_payload()
            lines += _trace_lines(t) + [""]
            ok = ok and t.status == "contradiction"
        if target in ("hopf", "all"):
            t = hopf_branch()
            payload["hopf"] = t.to_payload()
            lines += _trace_lines(t) + [""]
            ok = ok and t.status == "open" and "c + lambda*nu = 0" in t.conclusions
        if target in ("quadratic", "all"):
            spaces = _spaces(args.space)
            payload["quadratic"] = []
            for sp in spaces:
                q = quadratic_analysis(sp)
                payload["quadratic"].append(q.to_payload())
                lines += q.to_text().splitlines() + [""]
        if target in ("type-b", "all"):
            spaces = _spaces(args.space)
            payload["type_b"] = []
            for sp in spaces:
                r = type_b_exclusion(sp, samples=args.samples, tol=args.tol_oracle, catalog=cat)
                payload["type_b"].append(r.to_payload())
                lines.append(r.to_text())
                ok = ok and r.ok
        if target == "all":
            summary = verify_all(
                samples=args.samples,
                tol_oracle=args.tol_oracle,
                tol_witness=args.tol_witness,
                catalog=cat,
            )
            payload["witness_min_residual"] = summary.witness_min_residual
            ok = ok and summary.ok
            lines.append(
                f"witness: min over families of max parallel residual = "
                f"{summary.witness_min_residual:.6e} (> {args.tol_witness:g} required)"
            )
    except ProofError as exc:
        report = Report(f"prove {target}", f"FAILED: {exc}", payload, cat.version, lines)
        _write(report, args)
        return 1
    status = (
        "non-existence of a parallel *-Ricci tensor verified at desk scale"
        if ok else "verification FAILED"
    )
    report = Report(f"prove {target}", status, payload, cat.version, lines)
    _write(report, args)
    return 0 if ok else 1


def _spaces(space: Optional[str]):
    if space == "cp2":
        return (CP2,)
    if space == "ch2":
        return (CH2,)
    return (CP2, CH2)


# -- check -------------------------------------------------------------------

_CONDITION_BUILDERS = {
    ConditionKind.PARALLEL: parallel_equations,
    ConditionKind.XI_PARALLEL: xi_parallel_equations,
    ConditionKind.D_PARALLEL: d_parallel_equations,
    ConditionKind.SEMI_PARALLEL: semi_parallel_equations,
}


def cmd_check(args) -> int:
    ctx = build_nonhopf_context() if args.context == "nonhopf" else build_hopf_context()
    tensor = star_ricci_closed(ctx) if args.tensor == "star-ricci" else ricci(ctx)
    kind = ConditionKind.from_name(args.condition)
    if kind is ConditionKind.EINSTEIN:
        report = einstein_equations(ctx)
    elif kind is ConditionKind.PSEUDO_PARALLEL:
        L = parse_expr(args.pseudo_l, ctx.table, define_missing=True)
        report = pseudo_parallel_equations(ctx, tensor, L, args.tensor)
    else:
        report = _CONDITION_BUILDERS[kind](ctx, tensor, args.tensor)
    if args.assumptions:
        bindings = {}
        for item in args.assumptions:
            name, _, value = item.partition("=")
            if not _:
                raise SystemExit(f"assumption {item!r} is not of the form name=value")
            sym = ctx.table.get(name.strip())
            if sym is None:
                raise SystemExit(f"unknown symbol {name!r} in this context")
            bindings[sym] = parse_expr(value.strip(), ctx.table)
        report = report.substitute(bindings)
    entries = [
        {"x": [i.direction for i in e.x], "y": e.y.direction,
         "proj": e.proj.direction, "equation": e.equation.to_text()}
        for e in report.entries
    ]
    payload = {
        "tensor": args.tensor,
        "condition": kind.value,
        "context": args.context,
        "entries": entries,
    }
    lines = [f"{args.tensor} {kind.value} on the {args.context} frame: "
             f"{len(entries)} equations"]
    lines += [f"  {e.label()} : {e.equation.to_text()}" for e in report.entries]
    _write(Report(f"check {args.tensor} {kind.value} {args.context}", "ok",
                  payload, None, lines), args)
    return 0


# -- sweep -------------------------------------------------------------------

def cmd_sweep(args) -> int:
    cat = _catalog(args)
    fam = cat.get(args.family)
    kind = ConditionKind.from_name(args.condition)
    result = run_sweep(fam, args.r_min, args.r_max, args.samples, kind)
    below = sum(1 for row in result.rows if row.max_residual <= args.tol_witness)
    payload = {
        "family": fam.family_id,
        "space": fam.space.name,
        "condition": kind.value,
        "rows": [
            {"r": row.r, "max_residual": row.max_residual,
             "lam_nu_plus_c": row.lam_nu_plus_c}
            for row in result.rows
        ],
        "rows_below_witness_tol": below,
    }
    lines = [f"family {fam.family_id} ({fam.description})",
             f"{'r':>12}  {'max residual':>14}  {'lambda*nu + c':>14}"]
    for row in result.rows:
        lines.append(f"{row.r:12.6f}  {row.max_residual:14.6e}  {row.lam_nu_plus_c:+14.9f}")
    status = "ok" if below == 0 else f"{below} rows at or below the witness tolerance"
    _write(Report(f"sweep {fam.family_id}", status, payload, cat.version, lines), args)
    return 0


# -- expr --------------------------------------------------------------------

def cmd_expr(args) -> int:
    from .symbols import SymbolTable

    table = SymbolTable()
    try:
        expr = parse_expr(args.text, table, define_missing=True)
        if args.action == "eval":
            bindings = {}
            for item in args.args:
                name, _, value = item.partition("=")
                if not _:
                    raise SystemExit(f"binding {item!r} is not of the form name=value")
                bindings[name.strip()] = float(value)
            value = expr.eval(bindings)
            payload = {"expression": expr.to_text(), "value": value}
            lines = [f"{expr.to_text()} = {value!r}"]
            _write(Report("expr eval", "ok", payload, None, lines), args)
            return 0
        # solve
        if len(args.args) != 1:
            raise SystemExit("expr solve needs exactly one unknown name")
        unknown = table.get(args.args[0])
        if unknown is None:
            raise SystemExit(f"unknown {args.args[0]!r} does not occur in the expression")
        sol = solve_quadratic(expr, unknown)
        payload = {
            "expression": expr.to_text(),
            "unknown": unknown.name,
            "degree": sol.degree,
            "coefficients": [c.to_text() for c in sol.coefficients],
            "discriminant": sol.discriminant.to_text() if sol.discriminant else None,
            "roots": [
                {"offset": r.offset.to_text(), "sqrt_coeff": r.sqrt_coeff.to_text(),
                 "radicand": r.radicand.to_text()}
                for r in sol.roots
            ],
            "solvability_condition": sol.solvability_condition,
        }
        lines = [f"degree {sol.degree} in {unknown.name}"]
        if sol.discriminant is not None:
            lines.append(f"discriminant: {sol.discriminant.to_text()}")
        for i, r in enumerate(sol.roots):
            lines.append(
                f"root {i}: {r.offset.to_text()} + ({r.sqrt_coeff.to_text()}) "
                f"* sqrt({r.radicand.to_text()})"
            )
        if sol.solvability_condition:
            lines.append(f"real roots iff {sol.solvability_condition}")
        _write(Report("expr solve", "ok", payload, None, lines), args)
        return 0
    except ExprError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


# -- argument parsing ----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starricci",
        description="exact and numeric verification of *-Ricci parallelism "
                    "conditions on real hypersurfaces of the complex projective "
                    "and hyperbolic planes",
    )
    parser.add_argument("--version", action="version", version=__version__)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", metavar="PATH", default=None)
        p.add_argument("--tol-oracle", type=float, default=DEFAULT_ORACLE_TOL,
                       help="tolerance for exact-identity checks (default 1e-9)")
        p.add_argument("--tol-witness", type=float, default=DEFAULT_WITNESS_TOL,
                       help="threshold for 'nonzero' witnesses (default 1e-6)")
        p.add_argument("--catalog", metavar="PATH", default=None,
                       help="family catalog file replacing the builtin one")

    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("prove", help="replay a proof piece")
    p.add_argument("target", choices=("nonhopf", "hopf", "quadratic", "type-b", "all"))
    p.add_argument("--space", choices=("cp2", "ch2"), default=None)
    p.add_argument("--samples", type=int, default=100)
    common(p)
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("check", help="emit a symbolic condition report")
    p.add_argument("tensor", choices=("star-ricci", "ricci"))
    p.add_argument("condition", choices=[k.value for k in ConditionKind])
    p.add_argument("context", choices=("nonhopf", "hopf"))
    p.add_argument("assumptions", nargs="*", metavar="name=value",
                   help="substitutions applied to the report")
    p.add_argument("--pseudo-l", default="0", metavar="EXPR",
                   help="the function L for the pseudo-parallel condition")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sweep", help="numeric residual table over a radius grid")
    p.add_argument("family")
    p.add_argument("r_min", type=float)
    p.add_argument("r_max", type=float)
    p.add_argument("samples", type=int)
    p.add_argument("condition", choices=[k.value for k in ConditionKind])
    common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("expr", help="exact expression utilities")
    p.add_argument("action", choices=("eval", "solve"))
    p.add_argument("text")
    p.add_argument("args", nargs="*",
                   help="name=value bindings for eval, the unknown for solve")
    common(p)
    p.set_defaults(func=cmd_expr)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.tol_oracle <= 0 or args.tol_witness <= 0:
        print("error: tolerances must be positive", file=sys.stderr)
        return 2
    if getattr(args, "samples", 2) < 2:
        print("error: sample counts must be at least 2", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (ExprError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
