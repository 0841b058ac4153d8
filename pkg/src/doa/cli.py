"""Command-line front end: ``doa VERB [options]``.

Exit codes: 0 pass or equal, 1 fail, unequal or nonempty conditions,
2 usage or internal error.
"""

import argparse
import json
import os
import sys
import time

from .families import FAMILIES, FamilySpec, build_presentation
from .groebner import GroebnerTimeout, buchberger, hilbert_dimension
from .group import DomainError
from .ledger import UnknownLedgerError, ledger_names, ledger_system
from .poly import SYMBOL_INDEX, parse_poly
from .schemas import report_schema_version
from .verifier import (
    ObstructionSystem,
    check_properties,
    compare_systems,
    extract_system,
    std_nonexistence_check,
)


class UsageError(Exception):
    pass


def _read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {path}: {exc}") from exc
    except OSError as exc:
        raise UsageError(str(exc)) from exc


def _read_point(path):
    data = _read_json(path)
    if not isinstance(data, dict):
        raise UsageError(f"{path}: expected an object mapping symbols to values")
    return {k: parse_poly(str(v)) for k, v in data.items()}


def _spec(args):
    """FamilySpec from --family (a name or a FamilySpec JSON file), --n and --bindings."""
    fam = args.family
    if fam.endswith(".json") or os.path.isfile(fam):
        spec = FamilySpec.from_dict(_read_json(fam))
        if args.n is not None and args.n != spec.n:
            raise UsageError(f"--n {args.n} disagrees with the family file (n={spec.n})")
    else:
        if fam not in FAMILIES:
            raise UsageError(f"unknown family {fam!r}; known: {', '.join(sorted(FAMILIES))}")
        if args.n is None:
            raise UsageError("--n is required")
        spec = FamilySpec(fam, args.n)
    if getattr(args, "bindings", None):
        spec.bindings.update(_read_point(args.bindings))
    return spec


def _system(ref, n, jobs):
    """ObstructionSystem from FILE, ledger:NAME or family:NAME."""
    if ref.startswith("ledger:"):
        if n is None:
            raise UsageError("--n is required for ledger references")
        return ledger_system(ref[len("ledger:"):], n), None
    if ref.startswith("family:"):
        if n is None:
            raise UsageError("--n is required for family references")
        name = ref[len("family:"):]
        if name not in FAMILIES:
            raise UsageError(f"unknown family {name!r}")
        kappa = build_presentation(FamilySpec(name, n))
        return extract_system(kappa, jobs=jobs), sorted(kappa.symbols(), key=SYMBOL_INDEX.get)
    data = _read_json(ref)
    if "system" in data and "generators" not in data:
        data = data["system"]
    return ObstructionSystem.from_dict(data), data.get("symbols")


def _jobs(args):
    if args.jobs is not None:
        return args.jobs
    try:
        return max(1, int(os.environ.get("DOA_JOBS", "1")))
    except ValueError:
        raise UsageError("DOA_JOBS must be an integer")


def cmd_verify(args):
    spec = _spec(args)
    kappa = build_presentation(spec)
    if spec.name == "std-lie" and not spec.bindings:
        report = std_nonexistence_check(spec.n, jobs=_jobs(args))
    else:
        report = check_properties(kappa, jobs=_jobs(args))
    out = dict(report.to_dict(), family=spec.name)
    return out, 0 if report.passed else 1


def cmd_extract(args):
    spec = _spec(args)
    system = extract_system(build_presentation(spec), jobs=_jobs(args))
    data = system.to_dict()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(dict(data, schema_version=report_schema_version()), fh, indent=2)
            fh.write("\n")
    return {"system": data, "count": len(system), "out": args.out}, 0 if not len(system) else 1


def cmd_compare(args):
    jobs = _jobs(args)
    left, _ = _system(args.left, args.n, jobs)
    right, _ = _system(args.right, args.n if args.n is not None else left.n, jobs)
    rep = compare_systems(left, right, args.mode, budget=args.budget)
    return rep.to_dict(), 0 if rep.equal else 1


def cmd_groebner(args):
    system, symbols = _system(args.input, args.n, _jobs(args))
    if args.symbols:
        symbols = [s.strip() for s in args.symbols.split(",") if s.strip()]
        unknown = [s for s in symbols if s not in SYMBOL_INDEX]
        if unknown:
            raise UsageError(f"unknown symbols: {', '.join(unknown)}")
    out = {"timeout": False}
    try:
        gb = buchberger(system.generators, symbols=symbols, budget=args.budget)
    except GroebnerTimeout as exc:
        out.update(timeout=True, symbols=list(symbols or []), size=0, spairs=exc.stats["spairs"])
        return out, 1
    out.update(symbols=list(gb.symbols), size=len(gb), spairs=gb.stats["spairs"])
    if args.show:
        out["generators"] = [str(p) for p in gb.generators]
    if args.dimension or args.degree:
        affine, projective, degree = hilbert_dimension(gb)
        if args.dimension:
            out.update(affine_dim=affine, projective_dim=projective)
        if args.degree:
            out["degree"] = degree
    return out, 0


def cmd_oracle(args):
    from .rewrite import build_rewrite, oracle_report
    from .families import specialize
    spec = _spec(args)
    kappa = build_presentation(spec)
    point = _read_point(args.point)
    missing = kappa.symbols() - set(point)
    if missing:
        raise UsageError(f"point leaves parameters free: {', '.join(sorted(missing))}")
    rep = oracle_report(build_rewrite(specialize(kappa, point)))
    agrees = None
    if args.cross_check:
        system = extract_system(kappa, jobs=_jobs(args))
        agrees = (not system.nonvanishing({k: v.constant_value() for k, v in point.items()})) == rep["pass"]
    rep["symbolic_agrees"] = agrees
    return rep, 0 if rep["pass"] and agrees is not False else 1


def cmd_invariants(args):
    from .invariants import run_invariants
    if args.n is None:
        raise UsageError("--n is required")
    checks = run_invariants(args.n, jobs=_jobs(args))
    ok = all(c["pass"] for c in checks)
    return {"n": args.n, "pass": ok, "checks": checks}, 0 if ok else 1


def build_parser():
    p = argparse.ArgumentParser(prog="doa", description="PBW deformation checks for S_n on doubled representations.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=None, help="worker processes (default: $DOA_JOBS or 1)")
    common.add_argument("--compact", action="store_true", help="print JSON on one line")
    sub = p.add_subparsers(dest="verb", required=True)

    def add(name, help):
        return sub.add_parser(name, help=help, parents=[common])

    def family_args(sp):
        sp.add_argument("--family", required=True, help=f"family name ({', '.join(sorted(FAMILIES))}) or FamilySpec JSON")
        sp.add_argument("--n", type=int)
        sp.add_argument("--bindings", help="JSON object of parameter bindings")

    sp = add("verify", "check the five properties for a family")
    family_args(sp)
    sp = add("extract", "extract the obstruction system")
    family_args(sp)
    sp.add_argument("--out", help="write the ObstructionSystem JSON here")
    sp = add("compare", "compare two systems")
    sp.add_argument("--left", required=True, help="FILE, family:NAME or ledger:NAME")
    sp.add_argument("--right", required=True, help="FILE, family:NAME or ledger:NAME")
    sp.add_argument("--mode", choices=("set", "ideal"), default="ideal")
    sp.add_argument("--n", type=int)
    sp.add_argument("--budget", type=float, default=None, help="Groebner time budget in seconds")
    sp = add("groebner", "Groebner basis, dimension and degree")
    sp.add_argument("--in", dest="input", required=True, help="FILE, family:NAME or ledger:NAME")
    sp.add_argument("--n", type=int)
    sp.add_argument("--symbols", help="comma-separated ring symbols (default: those of the input)")
    sp.add_argument("--dimension", action="store_true")
    sp.add_argument("--degree", action="store_true")
    sp.add_argument("--show", action="store_true", help="include the basis in the report")
    sp.add_argument("--budget", type=float, default=3600.0)
    sp = add("oracle", "overlap-resolution check at a numeric point")
    family_args(sp)
    sp.add_argument("--point", required=True, help="JSON object with a value for every parameter")
    sp.add_argument("--cross-check", action="store_true", help="also evaluate the extracted system")
    sp = add("invariants", "run the structural property suite")
    sp.add_argument("--n", type=int)
    sp.epilog = "ledger names: " + ", ".join(ledger_names())
    return p


COMMANDS = {
    "verify": cmd_verify,
    "extract": cmd_extract,
    "compare": cmd_compare,
    "groebner": cmd_groebner,
    "oracle": cmd_oracle,
    "invariants": cmd_invariants,
}


def run(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    start = time.monotonic()
    try:
        body, code = COMMANDS[args.verb](args)
    except (UsageError, DomainError, UnknownLedgerError, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"doa {args.verb}: {msg}", file=sys.stderr)
        return 2
    report = {"schema_version": report_schema_version(), "verb": args.verb}
    report.update(body)
    report["elapsed_ms"] = int(1000 * (time.monotonic() - start))
    json.dump(report, stdout, indent=None if args.compact else 2, sort_keys=False)
    stdout.write("\n")
    return code


def main(argv=None):
    sys.exit(run(argv))
