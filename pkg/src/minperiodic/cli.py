"""Command-line front end.

Exit status: 0 success, 1 validation or constraint violation, 2 input error,
3 no realization template for the spec's shape.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .ilp import EmptyBoxError, oracle_solver
from .model import InvalidSpecError, SystemSpec, validate
from .realize import UnsupportedShapeError, realize
from .report import audit_report, dumps, min_report, realize_report, regularize_report
from .specfile import SpecParseError, load_counts, load_spec

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_UNSUPPORTED = 0, 1, 2, 3


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load_valid(path: str) -> SystemSpec:
    try:
        spec = load_spec(path)
    except SpecParseError as exc:
        raise _Exit(EXIT_INPUT, f"error: {exc}") from None
    violations = validate(spec)
    if violations:
        lines = "\n".join(f"  - {v}" for v in violations)
        raise _Exit(EXIT_VIOLATION, f"error: invalid spec {path}:\n{lines}")
    return spec


def _solver(args):
    if args.oracle:
        return oracle_solver(args.box), "oracle"
    return None, "simplex"


def cmd_min(args) -> tuple[str, int]:
    spec = _load_valid(args.spec)
    solver, name = _solver(args)
    return dumps(min_report(spec, solver, name)), EXIT_OK


def cmd_regularize(args) -> tuple[str, int]:
    return dumps(regularize_report(_load_valid(args.spec))), EXIT_OK


def cmd_audit(args) -> tuple[str, int]:
    spec = _load_valid(args.spec)
    try:
        counts = load_counts(args.counts)
    except SpecParseError as exc:
        raise _Exit(EXIT_INPUT, f"error: {exc}") from None
    known = [c.id for c in spec.components]
    unknown = sorted(set(counts) - set(known))
    if unknown:
        raise _Exit(EXIT_INPUT, f"error: counts name unknown components: {', '.join(unknown)}")
    missing = [cid for cid in known if cid not in counts]
    if missing:
        raise _Exit(EXIT_INPUT, f"error: counts missing for components: {', '.join(missing)}")
    report, ok = audit_report(spec, counts)
    return dumps(report), EXIT_OK if ok else EXIT_VIOLATION


def cmd_realize(args) -> tuple[str, int]:
    spec = _load_valid(args.spec)
    try:
        witness = realize(spec)
    except UnsupportedShapeError as exc:
        raise _Exit(EXIT_UNSUPPORTED, f"error: {exc}") from None
    solver, name = _solver(args)
    report, ok = realize_report(spec, witness, solver, name)
    return dumps(report), EXIT_OK if ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--oracle", action="store_true",
                        help="solve by exhaustive enumeration instead of the simplex path")
    common.add_argument("--box", type=int, default=None, metavar="B",
                        help="enumeration bound for --oracle (default 4*(l1+l2)+12 per component)")

    parser = argparse.ArgumentParser(
        prog="minperiodic",
        description="Minimum isolated periodic points for 3-diffeomorphisms with codimension-1 expanding attractors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("min", parents=[common], help="global minimum with per-component solutions")
    p.add_argument("spec")
    p.set_defaults(func=cmd_min)
    p = sub.add_parser("regularize", parents=[common], help="regularized component descriptors")
    p.add_argument("spec")
    p.set_defaults(func=cmd_regularize)
    p = sub.add_parser("audit", parents=[common], help="check candidate point counts per component")
    p.add_argument("spec")
    p.add_argument("counts")
    p.set_defaults(func=cmd_audit)
    p = sub.add_parser("realize", parents=[common], help="witness phase graph attaining the minimum")
    p.add_argument("spec")
    p.set_defaults(func=cmd_realize)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.box is not None and args.box < 1:
        parser.error("--box must be at least 1")
    try:
        out, code = args.func(args)
    except _Exit as exc:
        print(exc, file=sys.stderr)
        return exc.code
    except EmptyBoxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvalidSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
