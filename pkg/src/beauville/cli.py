"""Command-line front end.

Exit codes: 0 success, 1 verification failure or no structure, 2 usage or
malformed input, 3 infeasible parameters.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import certificate
from .catalog import catalog_records
from .counting import CapExceeded, class_representatives, phi2_bruteforce, phi2_moebius
from .perm import format_cycles
from .structure import (
    DEFAULT_CAP, AssemblyError, Infeasible, NoStructure, Unsupported, a5_obstruction, build_beauville,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INFEASIBLE = 0, 1, 2, 3
CLASSREPS_MAX_N = 7


class UsageError(Exception):
    pass


def _emit(obj, stream=None):
    stream = stream or sys.stdout
    stream.write(json.dumps(obj, sort_keys=True) + "\n")


def _default_cap() -> int:
    raw = os.environ.get("BVL_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"BVL_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise UsageError("BVL_CAP must be positive")
    return cap


def cmd_d2(args) -> int:
    fn = {"brute": phi2_bruteforce, "moebius": phi2_moebius}[args.method]
    try:
        report = fn(args.n)
    except CapExceeded as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    _emit(report.as_dict())
    return EXIT_OK


def cmd_construct(args) -> int:
    cap = args.cap if args.cap is not None else _default_cap()
    try:
        result = build_beauville(args.n, args.k, cap=cap, seed=args.seed)
    except Infeasible as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except AssemblyError as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if isinstance(result, NoStructure):
        _emit({"no_structure": {"n": result.n, "k": result.k, "reason": result.reason,
                                "obstruction": result.report}})
        return EXIT_FAIL
    if isinstance(result, Unsupported):
        print(f"unsupported: {result.reason}", file=sys.stderr)
        return EXIT_INFEASIBLE
    data = certificate.dumps(result)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
        print(f"wrote {args.out}: A_{result.n}^{result.k}, types {result.type}, "
              f"recipe {result.recipe}", file=sys.stderr)
    else:
        sys.stdout.write(data.decode("utf-8"))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        with open(args.path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        print(f"cannot read {args.path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        result = certificate.verify_bytes(data)
    except certificate.MalformedCertificate as exc:
        print(f"malformed certificate: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit({"ok": int(result.ok), "failed": result.failed, "report": result.report})
    if not result.ok:
        print(f"verification failed: {', '.join(result.failed)}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_catalog(args) -> int:
    try:
        rows = catalog_records(args.n)
    except ValueError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    bad = 0
    for row in rows:
        _emit(row)
        if args.verify and not row["proof"]:
            bad += 1
            print(f"{row['name']}: not verified: {'; '.join(row['diagnostics'])}", file=sys.stderr)
    return EXIT_FAIL if bad else EXIT_OK


def cmd_classreps(args) -> int:
    if not 5 <= args.n <= CLASSREPS_MAX_N:
        print(f"infeasible: classreps supports 5 <= n <= {CLASSREPS_MAX_N}", file=sys.stderr)
        return EXIT_INFEASIBLE
    for T in class_representatives(args.n):
        _emit({"x": format_cycles(T.x), "y": format_cycles(T.y), "z": format_cycles(T.z),
               "type": list(T.type)})
    return EXIT_OK


def cmd_no_beauville(args) -> int:
    if args.n != 5:
        print("infeasible: the exhaustive obstruction scan is implemented for n = 5 only", file=sys.stderr)
        return EXIT_INFEASIBLE
    report = a5_obstruction()
    _emit(report)
    return EXIT_OK if report["passing"] == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="beauville",
                                     description="Beauville structures on powers of alternating groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("d2", help="count Aut-classes of generating pairs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("brute", "moebius"), default="brute")
    p.set_defaults(func=cmd_d2)

    p = sub.add_parser("construct", help="build and certify a structure on A_n^k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=None, help=f"largest k attempted (default BVL_CAP or {DEFAULT_CAP})")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="re-verify a certificate")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="list the explicit triples of degree n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="exit 1 if any entry fails to verify")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("classreps", help="one generating triple per Aut-class")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_classreps)

    p = sub.add_parser("no-beauville", help="exhaustive condition (3) scan for A_5")
    p.add_argument("--n", type=int, default=5)
    p.set_defaults(func=cmd_no_beauville)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
