"""Command-line front end.

    altalg build KIND [INPUT ...] [--field Q|gf<p>] [--gamma=g1,g2,...] [-o FILE]
    altalg info FILE [--json]
    altalg check FILE WHICH [--samples N] [--seed S] [--exhaustive] [--threads T] [--json]

Exit codes: 0 verified, 1 property fails (witness printed), 2 usage, parse
or precondition error, 3 arithmetic overflow, 4 inconclusive.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import constructions as cons
from .analysis import SamplingPlan, center, is_alternative, is_associative, nucleus, verify_identities
from .core import direct_sum
from .errors import AlgebraError, NotAlternative, PreconditionFailed, ZeroGamma
from .fileformat import dumps, load_algebra
from .scalars import FieldSpec
from .zerodiv import check_consequences, check_main_theorem, hypothesis_check, zero_divisor_census

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_OVERFLOW, EXIT_UNKNOWN = 0, 1, 2, 3, 4

GAMMA_COUNTS = {"complex": 1, "quaternion": 2, "octonion": 3, "sedenion": 4}
BUILD_KINDS = ["octonion", "quaternion", "zorn", "m2", "sedenion", "complex", "cd", "direct-sum"]
CHECKS = ["identities", "zerodiv", "hypothesis", "theorem", "lemma31"]


class UsageError(Exception):
    pass


def _parse_gammas(field: FieldSpec, text: str | None, count: int | None) -> list:
    if text is None:
        if count is None:
            raise UsageError("--gamma is required for cd")
        return [field.from_int(-1)] * count
    try:
        gammas = [field.parse_scalar(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if count is not None and len(gammas) != count:
        raise UsageError(f"expected {count} gamma values, got {len(gammas)}")
    if not gammas:
        raise UsageError("empty --gamma list")
    if any(g == 0 for g in gammas):
        raise UsageError("gamma values must be nonzero")
    return gammas


def build_algebra(kind: str, field: FieldSpec, gamma: str | None = None, inputs=(), name: str | None = None):
    if kind in GAMMA_COUNTS or kind == "cd":
        gammas = _parse_gammas(field, gamma, GAMMA_COUNTS.get(kind))
        alg = cons.cayley_dickson_chain(field, gammas).algebra
    elif kind == "zorn":
        alg = cons.zorn_split_octonions(field)
    elif kind == "m2":
        alg = cons.matrix_algebra_2x2(field)
    elif kind == "direct-sum":
        if len(inputs) != 2:
            raise UsageError("direct-sum takes exactly two input files")
        left, right = (load_algebra(p) for p in inputs)
        alg = direct_sum(left, right)
    else:
        raise UsageError(f"unknown kind {kind!r}")
    if kind != "direct-sum" and inputs:
        raise UsageError(f"{kind} takes no input files")
    if name:
        from .core import StructureConstants
        alg = StructureConstants(name, alg.field, alg.dim, alg.entries(), alg.basis_names, alg.unit)
    return alg


def _yn(b: bool) -> str:
    return "yes" if b else "no"


def _elem(x) -> str:
    return str(x)


def cmd_build(args) -> int:
    field = FieldSpec.parse(args.field)
    alg = build_algebra(args.kind, field, args.gamma, args.inputs, args.name)
    text = dumps(alg)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        print(f"wrote {alg.name} (dim {alg.dim}, {alg.field}) to {args.output}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_info(args) -> int:
    alg = load_algebra(args.file)
    alt = is_alternative(alg)
    assoc = is_associative(alg)
    nuc = nucleus(alg, cross_check=False)
    cen = center(alg)
    info = {
        "name": alg.name,
        "field": str(alg.field),
        "dim": alg.dim,
        "unit": alg.has_unit,
        "alternative": alt.passed,
        "associative": assoc.passed,
        "nucleus_dim": nuc.dimension,
        "center_dim": cen.dimension,
    }
    if args.json:
        info["alternative_witness"] = None if alt.witness is None else [x.format() for x in alt.witness]
        info["associative_witness"] = None if assoc.witness is None else [x.format() for x in assoc.witness]
        print(json.dumps(info, indent=1))
    else:
        print(f"name: {alg.name}")
        print(f"field: {alg.field}")
        print(f"dim: {alg.dim}")
        print(f"unit: {_yn(alg.has_unit)}")
        print(f"alternative={_yn(alt.passed)} associative={_yn(assoc.passed)} "
              f"nucleus={nuc.dimension} center={cen.dimension}")
        if not alt.passed:
            print(f"  not alternative: {alt.details['identity']} fails at "
                  f"x={_elem(alt.witness[0])}, y={_elem(alt.witness[1])}")
        if not assoc.passed:
            x, y, z = assoc.witness
            print(f"  not associative: ({x}, {y}, {z}) = {assoc.defect}")
    return EXIT_OK


def _report_line(r) -> str:
    mode = "exhaustive" if r.exhaustive else f"sampled, seed {r.seed}"
    line = f"{'PASS' if r.passed else 'FAIL'}  {r.name}  [{mode}, {r.samples_used} checks]"
    if not r.passed:
        line += "\n      witness: " + ", ".join(_elem(x) for x in r.witness)
        line += f"\n      defect: {r.defect}"
    return line


def cmd_check(args) -> int:
    alg = load_algebra(args.file)
    if args.exhaustive and not alg.field.is_finite:
        raise UsageError("--exhaustive needs a finite field")
    plan = SamplingPlan(samples=args.samples, seed=args.seed, exhaustive=True if args.exhaustive else None)
    threads = args.threads
    out: dict = {"algebra": alg.name, "field": str(alg.field), "check": args.which}
    lines: list[str] = []

    if args.which == "identities":
        reports = verify_identities(alg, plan)
        ok = all(r.passed for r in reports)
        out["reports"] = [r.to_dict() for r in reports]
        lines = [_report_line(r) for r in reports]
        code = EXIT_OK if ok else EXIT_FAIL
    elif args.which == "zerodiv":
        c = zero_divisor_census(alg, plan, threads)
        out["result"] = c.to_dict()
        if c.status == "NoZeroDivisors":
            lines.append(f"no zero divisors ({c.method})")
            code = EXIT_OK
        elif c.status == "ZeroDivisorsExist":
            w = c.witness
            lines.append(f"zero divisor found ({c.method}): {w.element}")
            if w.is_left:
                lines.append(f"  left:  ({w.element}) * ({w.left_witness}) = 0")
            if w.is_right:
                lines.append(f"  right: ({w.right_witness}) * ({w.element}) = 0")
            code = EXIT_FAIL
        else:
            lines.append(f"none found in {c.examined} samples (seed {c.seed}); inconclusive")
            code = EXIT_UNKNOWN
    elif args.which == "hypothesis":
        h = hypothesis_check(alg, plan, threads)
        out["result"] = h.to_dict()
        code, line = _hypothesis_summary(h)
        lines.append(line)
        if h.witness is not None:
            lines.extend(_hyp_witness_lines(h.witness))
    elif args.which == "theorem":
        v = check_main_theorem(alg, plan, threads)
        out["result"] = v.to_dict()
        if not v.applicable:
            why = "not alternative" if not v.alternative.passed else "associative"
            head = f"not applicable ({why})"
        else:
            head = f"hypothesis {v.hypothesis.status} ({v.hypothesis.method})"
        zd = {"NoZeroDivisors": "no zero divisors", "ZeroDivisorsExist": "zero divisors exist",
              "Unknown": "zero divisors unknown"}[v.census.status]
        lines.append(f"{'consistent' if v.consistent else 'INCONSISTENT'}; {head}; {zd} ({v.census.method})")
        if v.hypothesis is not None and v.hypothesis.witness is not None:
            lines.extend(_hyp_witness_lines(v.hypothesis.witness))
        code = EXIT_OK if v.consistent else EXIT_FAIL
    else:
        reports = check_consequences(alg, plan, threads)
        out["reports"] = [r.to_dict() for r in reports]
        lines = [_report_line(r) for r in reports]
        code = EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL

    out["exit_code"] = code
    if args.json:
        print(json.dumps(out, indent=1))
    else:
        print("\n".join(lines))
    return code


def _hypothesis_summary(h) -> tuple[int, str]:
    if h.status == "HoldsVacuously":
        return EXIT_OK, "HoldsVacuously (associative)"
    if h.status == "Holds":
        return EXIT_OK, f"Holds ({h.method})"
    if h.status == "Fails":
        return EXIT_FAIL, f"Fails ({h.method}): a nonzero associator is a zero divisor"
    return EXIT_UNKNOWN, f"Unknown ({h.method}): no failing associator in {h.pairs_examined} pairs"


def _hyp_witness_lines(w) -> list[str]:
    prod = f"({w.associator}) * ({w.partner}) = 0" if w.side == "left" else f"({w.partner}) * ({w.associator}) = 0"
    return [
        f"  x = {w.x}",
        f"  y = {w.y}",
        f"  z = {w.z}",
        f"  (x,y,z) = {w.associator}",
        f"  partner: {prod}",
    ]


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="altalg", description="Exact checks on finite-dimensional nonassociative algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="write a standard algebra to a JSON file")
    b.add_argument("kind", choices=BUILD_KINDS)
    b.add_argument("inputs", nargs="*", help="input files (direct-sum only)")
    b.add_argument("--field", default="Q", help="Q or gf<p> (default Q)")
    b.add_argument("--gamma", help="comma-separated Cayley-Dickson parameters, e.g. --gamma=-1,-1,-1")
    b.add_argument("--name", help="override the algebra name")
    b.add_argument("-o", "--output", help="output path (default stdout)")
    b.set_defaults(func=cmd_build)

    i = sub.add_parser("info", help="summarise an algebra file")
    i.add_argument("file")
    i.add_argument("--json", action="store_true")
    i.set_defaults(func=cmd_info)

    c = sub.add_parser("check", help="run a property check")
    c.add_argument("file")
    c.add_argument("which", choices=CHECKS)
    c.add_argument("--samples", type=int, default=10_000)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--exhaustive", action="store_true", help="force enumeration (finite fields)")
    c.add_argument("--threads", type=int, default=1)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PreconditionFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotAlternative as exc:
        print(f"error: precondition failed: alternative ({exc})", file=sys.stderr)
        return EXIT_USAGE
    except OverflowError as exc:
        print(f"error: arithmetic overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except (UsageError, ZeroGamma, AlgebraError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
