"""``pseudoalg`` command line: axiom checks, catalogue instances, basis changes, solving, the full suite.

Every command prints a JSON report on stdout with sorted keys, so identical
inputs give byte-identical output. Exit codes: 0 success, 1 a check failed,
2 malformed input (the error is reported as JSON on stderr).
"""

import argparse
import json
import os
import sys

from . import catalog, solver, verify
from .errors import InputError, PseudoAlgError
from .jsonio import (
    basis_from_json,
    dumps,
    lie_from_json,
    load_file,
    params_from_json,
    pseudo_to_json,
    table_from_json,
    table_to_json,
    tensor_to_json,
)
from .lie import PRESETS, as_fraction
from .pseudo import AXIOMS, check_axiom

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class UsageError(InputError):
    """Bad flags; reported like any other malformed input."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _axiom_record(T, axiom, source):
    report = check_axiom(T, axiom)
    return {
        "source": source,
        "axiom": axiom,
        "status": "pass" if report.passed else "fail",
        "failures": [{"triple": list(triple), "defect": pseudo_to_json(d)} for triple, d in report.failures],
    }


def _summary(records):
    passed = sum(1 for r in records if r["status"] == "pass")
    return {"checks": len(records), "passed": passed, "failed": len(records) - passed}


def _load_lie(source):
    """A Lie algebra from a JSON file or a preset name."""
    if os.path.exists(source):
        return lie_from_json(load_file(source))
    if source in PRESETS:
        return PRESETS[source]()
    raise InputError(f"{source!r} is neither a readable file nor a preset ({', '.join(sorted(PRESETS))})")


def _write(path, obj):
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(dumps(obj))
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from None


def cmd_check(args):
    if args.all == bool(args.axiom):
        raise UsageError("give exactly one of --axiom or --all")
    T = table_from_json(load_file(args.input))
    axioms = AXIOMS if args.all else (args.axiom,)
    records = [_axiom_record(T, ax, args.input) for ax in axioms]
    report = {
        "command": {"name": "check", "input": args.input, "axioms": list(axioms)},
        "checks": records,
        "summary": _summary(records),
    }
    return report, EXIT_OK if all(r["status"] == "pass" for r in records) else EXIT_FAIL


def _entry_axioms(eid):
    if eid == catalog.CURRENT_ID:
        return ("left-prelie",)
    axiom = catalog.get_entry(eid).axiom
    if axiom == "assoc":
        return AXIOMS
    if axiom == "left+right":
        return ("left-prelie", "right-prelie")
    return (axiom,)


def cmd_catalog(args):
    L = _load_lie(args.lie)
    params = params_from_json(load_file(args.params), L) if args.params else {}
    table, conditions = catalog.instantiate(args.entry, params, L)
    records = [_axiom_record(table, ax, args.entry) for ax in _entry_axioms(args.entry)] if args.verify else []
    if args.emit:
        _write(args.emit, table_to_json(table))
    report = {
        "command": {"name": "catalog", "entry": args.entry, "lie": args.lie, "params": args.params, "verify": args.verify},
        "side_conditions": {"satisfied": conditions.satisfied, "results": conditions.as_dict()},
        "table": table_to_json(table),
        "checks": records,
        "summary": _summary(records),
    }
    ok = all(r["status"] == "pass" for r in records) and (conditions.satisfied or not args.verify)
    return report, EXIT_OK if ok else EXIT_FAIL


def cmd_transform(args):
    T = table_from_json(load_file(args.input))
    B = basis_from_json(load_file(args.basis), T.L)
    moved = catalog.transform(T, B)
    report = {
        "command": {"name": "transform", "input": args.input, "basis": args.basis, "expect": args.expect},
        "table": table_to_json(moved),
    }
    code = EXIT_OK
    if args.expect:
        target = table_from_json(load_file(args.expect))
        same = catalog.equivalent(moved, target)
        report["expect"] = {"source": args.expect, "status": "pass" if same else "fail"}
        code = EXIT_OK if same else EXIT_FAIL
    if args.emit:
        _write(args.emit, table_to_json(moved))
    return report, code


def _vector(text, L):
    try:
        v = json.loads(text)
    except json.JSONDecodeError:
        raise InputError(f"--s must be a JSON list, got {text!r}") from None
    if not isinstance(v, list) or len(v) != L.dim:
        raise InputError(f"--s must be a list of {L.dim} rationals")
    return tuple(as_fraction(x) for x in v)


def cmd_solve(args):
    L = _load_lie(args.lie)
    params = {}
    if args.s is not None:
        params["s"] = _vector(args.s, L)
    for name in ("t", "l", "k"):
        value = getattr(args, name)
        if value is not None:
            params[name] = as_fraction(value)
    basis = solver.linear_nullspace(args.equation, args.degree, L, **params)
    body = {
        "equation": args.equation,
        "degree": args.degree,
        "dimension": len(basis),
        "basis": [tensor_to_json(b) for b in basis],
    }
    if args.out:
        _write(args.out, body)
    command = {"name": "solve", "equation": args.equation, "lie": args.lie, "degree": args.degree, "out": args.out}
    command.update({k: v for k, v in (("s", args.s), ("t", args.t), ("l", args.l), ("k", args.k)) if v is not None})
    return {"command": command, **body}, EXIT_OK


def cmd_verify(args):
    result = verify.run_suite(args.suite)
    if args.format == "text":
        return result.render(args.timings), EXIT_OK if result.passed else EXIT_FAIL
    report = {"command": {"name": "verify-classification", "suite": args.suite}, **result.as_dict(args.timings)}
    return report, EXIT_OK if result.passed else EXIT_FAIL


def build_parser():
    p = _Parser(prog="pseudoalg", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="check pseudoalgebra axioms on a product table")
    c.add_argument("--input", required=True, help="product table JSON")
    c.add_argument("--axiom", choices=AXIOMS)
    c.add_argument("--all", action="store_true", help="check all three axioms")
    c.set_defaults(run=cmd_check)

    c = sub.add_parser("catalog", help="instantiate a classification entry")
    c.add_argument("--entry", required=True, help="entry id such as thm3.6/3, cor3.12/ii or cur")
    c.add_argument("--lie", required=True, help="Lie algebra JSON file or preset name")
    c.add_argument("--params", help="parameter JSON file")
    c.add_argument("--emit", help="write the product table here")
    c.add_argument("--verify", action="store_true", help="check the entry's axioms")
    c.set_defaults(run=cmd_catalog)

    c = sub.add_parser("transform", help="apply an H-linear change of basis")
    c.add_argument("--input", required=True, help="product table JSON")
    c.add_argument("--basis", required=True, help='basis change JSON {"P": ..., "Pinv": ...}')
    c.add_argument("--expect", help="table the result must equal")
    c.add_argument("--emit", help="write the transformed table here")
    c.set_defaults(run=cmd_transform)

    c = sub.add_parser("solve", help="exact bounded-degree nullspace of a linear equation")
    c.add_argument("--equation", required=True, choices=solver.LABELS)
    c.add_argument("--lie", required=True, help="Lie algebra JSON file or preset name")
    c.add_argument("--s", help="vector as a JSON list, e.g. '[1]'")
    c.add_argument("--t", help="rational, e.g. 5 or -3/4")
    c.add_argument("--l", help="rational")
    c.add_argument("--k", help="rational")
    c.add_argument("--degree", required=True, type=int)
    c.add_argument("--out", help="write the basis here")
    c.set_defaults(run=cmd_solve)

    c = sub.add_parser("verify-classification", help="run the classification verification suite")
    c.add_argument("--suite", choices=("quick", "full"), default="quick")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.add_argument("--timings", action="store_true", help="include wall times (output is then not reproducible)")
    c.set_defaults(run=cmd_verify)
    return p


def _error(exc):
    kind = "input" if isinstance(exc, InputError) else "computation"
    body = {"error": {"type": type(exc).__name__, "kind": kind, "message": str(exc)}}
    triple = getattr(exc, "triple", None)
    if triple is not None:
        body["error"]["triple"] = list(triple)
    index = getattr(exc, "index", None)
    if index is not None:
        body["error"]["index"] = list(index)
    return body


def run(argv=None):
    """Run one command; returns ``(exit code, stdout text, stderr text)``."""
    try:
        args = build_parser().parse_args(argv)
        report, code = args.run(args)
    except PseudoAlgError as exc:
        return EXIT_INPUT, "", dumps(_error(exc))
    out = report if isinstance(report, str) else dumps(report)
    return code, out, ""


def main(argv=None):
    try:
        code, out, err = run(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:
        return exc.code or 0  # --help
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
