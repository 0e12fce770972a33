"""Command-line entry point.

Exit status: 0 when every selected check passes, 1 on a check failure,
2 on a usage or precondition error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import report as report_mod
from .symplectic import SMALL_PRIMES
from .theorem import full_theorem_report

CHECK_NAMES = ("relations", "torsion", "theorem", "modp")


class UsageError(Exception):
    pass


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mcg-verify",
        description=(
            "Verify torsion generating sets of the genus-g mapping class group "
            "at the level of the integral symplectic representation."
        ),
    )
    parser.add_argument("--genus", type=int, required=True, help="surface genus, >= 3")
    parser.add_argument(
        "--checks",
        default=None,
        help=f"comma-separated subset of {','.join(CHECK_NAMES)} (default: all applicable)",
    )
    parser.add_argument("--prime", type=int, default=None,
                        help="small prime for the modp certificate")
    parser.add_argument("--orbit-cap", type=int, default=None,
                        help="bound on the orbit exploration (default 10*(3g-1)*g)")
    parser.add_argument("--enum-cap", type=int, default=None,
                        help="bound on mod-p subgroup enumeration (default 2000000)")
    parser.add_argument("--witness", action="store_true",
                        help="record generator words witnessing orbit and membership facts")
    parser.add_argument("--output", choices=("text", "structured"), default="text")
    parser.add_argument("--out", default=None, help="also write the report to this path")
    parser.add_argument("--eval", dest="eval_word", default=None, metavar="WORD",
                        help="evaluate a generator word (e.g. 'Ta1 F2 Ta1^-1') and print it")
    return parser


def _parse_checks(text):
    if text is None:
        return None  # all applicable, resolved by full_theorem_report
    checks = set()
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        if token not in CHECK_NAMES:
            raise UsageError(f"unknown check {token!r}; choose from {CHECK_NAMES}")
        checks.add(token)
    if not checks:
        raise UsageError("no checks selected")
    return checks


def _eval_word(g, text):
    from .torsion import sigma_matrix, theorem_generators
    from .words import evaluate, format_word, parse_word, twist_assignment

    assignment = twist_assignment(g)
    if g >= 3:
        certs = theorem_generators(g)
        assignment["F1"] = certs[0].matrix
        assignment["F2"] = certs[1].matrix
        assignment["F3"] = certs[3].matrix
        if g == 3:
            assignment["Sigma"] = sigma_matrix()
    word = parse_word(text, known=set(assignment))
    matrix = evaluate(word, assignment)
    lines = [f"word: {format_word(word)}"]
    lines += [" ".join(f"{x:4d}" for x in row) for row in matrix.rows]
    return "\n".join(lines) + "\n"


def run(args):
    if args.genus is None or args.genus < 2:
        raise UsageError(f"genus must be >= 2, got {args.genus}")
    if args.prime is not None and args.prime not in SMALL_PRIMES:
        raise UsageError(f"prime must be one of {SMALL_PRIMES}, got {args.prime}")

    if args.eval_word is not None:
        try:
            sys.stdout.write(_eval_word(args.genus, args.eval_word))
        except ValueError as exc:
            raise UsageError(str(exc))
        return 0

    checks = _parse_checks(args.checks)
    if checks is not None and "modp" in checks and args.prime is None:
        raise UsageError("--checks modp requires --prime")

    orbit_cap = args.orbit_cap
    if orbit_cap is None and os.environ.get("MCGTORSION_ORBIT_CAP"):
        orbit_cap = int(os.environ["MCGTORSION_ORBIT_CAP"])
    enum_cap = args.enum_cap
    if enum_cap is None:
        enum_cap = int(os.environ.get("MCGTORSION_ENUM_CAP", 2_000_000))

    try:
        report, timings = full_theorem_report(
            args.genus,
            prime=args.prime,
            orbit_cap=orbit_cap,
            enum_cap=enum_cap,
            with_witnesses=args.witness,
            checks=checks,
        )
    except ValueError as exc:
        raise UsageError(str(exc))

    env = report_mod.envelope(report, timings)
    text = (report_mod.emit_json(env) if args.output == "structured"
            else report_mod.emit_text(env))
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    return 0 if report["passed"] else 1


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
