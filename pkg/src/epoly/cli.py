"""Command-line front end.

    epoly eval FILE [--format text|json] [--convention signed|unsigned]
    epoly audit [--suite sl|gl|all] [--format text|json]
    epoly betti NAME --dim D [--suite sl|gl|all]

Exit status: 0 clean, 1 when a directive or audit item fails (documented
discrepancies do not count), 2 for usage, parse and file errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from epoly import genus2
from epoly.dsl import parse, run
from epoly.errors import DslError, EpolyError
from epoly.hodge import SignConvention, betti_from_pure_E, trim_betti

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--convention", choices=[c.value for c in SignConvention], default="signed",
                        help="default sign convention for odd-degree classes")

    p = argparse.ArgumentParser(prog="epoly", description="E-polynomial calculator and audit")
    sub = p.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", parents=[common], help="run a .sx program")
    ev.add_argument("file")

    au = sub.add_parser("audit", parents=[common], help="audit the bundled genus-2 suites")
    au.add_argument("--suite", choices=("sl", "gl", "all"), default="all")

    be = sub.add_parser("betti", parents=[common], help="Betti numbers of a bundled value (assumes purity)")
    be.add_argument("name")
    be.add_argument("--dim", type=int, required=True)
    be.add_argument("--suite", choices=("sl", "gl", "all"), default="all")
    return p


def _suites(choice: str) -> tuple[str, ...]:
    return genus2.SUITES if choice == "all" else (choice,)


def cmd_eval(args, out, err) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            source = fh.read()
    except OSError as exc:
        print(f"epoly: cannot read {args.file}: {exc.strerror or exc}", file=err)
        return EXIT_USAGE
    try:
        program = parse(source)
    except (DslError, EpolyError) as exc:
        print(f"{args.file}: {exc}", file=err)
        return EXIT_USAGE
    report = run(program, SignConvention(args.convention))
    out.write(report.to_json() if args.format == "json" else report.to_text())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_audit(args, out, err) -> int:
    try:
        report = genus2.audit(_suites(args.suite))
    except (OSError, ValueError, KeyError) as exc:
        print(f"epoly: cannot load expected values: {exc}", file=err)
        return EXIT_USAGE
    out.write(report.to_json() if args.format == "json" else report.to_text())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_betti(args, out, err) -> int:
    for suite in _suites(args.suite):
        values = genus2.run_suite(suite).values
        if args.name in values:
            break
    else:
        print(f"epoly: no value named {args.name!r} in suite(s) {', '.join(_suites(args.suite))}", file=err)
        return EXIT_USAGE
    try:
        b = trim_betti(betti_from_pure_E(values[args.name], args.dim))
    except EpolyError as exc:
        print(f"epoly: {exc}", file=err)
        return EXIT_FAIL
    if args.format == "json":
        out.write(json.dumps({"name": args.name, "dim": args.dim, "betti": b}) + "\n")
    else:
        out.write(" ".join(map(str, b)) + "\n")
    return EXIT_OK


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors itself
        return int(exc.code or 0)
    handler = {"eval": cmd_eval, "audit": cmd_audit, "betti": cmd_betti}[args.command]
    return handler(args, out, err)


if __name__ == "__main__":
    sys.exit(main())
