"""Command-line interface: behavior, glue, emergence, and check.

Exit codes: 0 success, 1 domain error, 2 usage or input-parsing error.
Rationals are always printed as ``p/q`` (or a plain integer), never as
decimals; with ``--json`` every command emits a machine-readable report.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .circuits import compile_circuit, emergence_report, glue, parse_glue, parse_netlist
from .errors import DomainError, ParseError
from .laws import LAWS, run_law
from .systems import behavior_image


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _print_basis(sub, out):
    for row in sub.basis:
        out.write("  [" + ", ".join(str(x) for x in row) + "]\n")


def cmd_behavior(args, out) -> int:
    compiled = compile_circuit(parse_netlist(_read(args.netlist)))
    sub = behavior_image(compiled.system)
    if args.json:
        report = {
            "circuit": compiled.circuit.name,
            "universum": {"vars": list(compiled.universum.vars), "dim": compiled.universum.dim},
            "equations": {
                "count": compiled.rep.codomain.dim,
                "names": list(compiled.rep.codomain.vars),
            },
            "behavior": sub.to_json(),
        }
        out.write(json.dumps(report, indent=2) + "\n")
        return 0
    out.write(f"circuit {compiled.circuit.name}: dim(U)={compiled.universum.dim} dim(B)={sub.dim}\n")
    out.write("universum: " + " ".join(compiled.universum.vars) + "\n")
    out.write("basis:\n")
    _print_basis(sub, out)
    return 0


def cmd_glue(args, out) -> int:
    left = parse_netlist(_read(args.left))
    right = parse_netlist(_read(args.right))
    spec = parse_glue(_read(args.glue))
    result = glue(left, right, spec, close_dangling=True if args.close_dangling else None)
    sub = result.behavior
    if args.json:
        report = {
            "glue": spec.name,
            "close_dangling": result.close_dangling,
            "identify": [[l, r] for l, r, _ in result.merged],
            "universum": {"vars": list(result.universum.vars), "dim": result.universum.dim},
            "behavior": sub.to_json(),
            "syntax_dim": behavior_image(result.syntax_system).dim,
            "semantics_dim": behavior_image(result.semantics_system).dim,
            "preservation_equal": result.preservation_equal,
            "closed_terminals": list(result.closed_terminals),
        }
        out.write(json.dumps(report, indent=2) + "\n")
        return 0
    out.write(
        f"glued universum: dim={result.universum.dim}\n"
        f"behavior: dim={sub.dim}\n"
        f"syntax dim={behavior_image(result.syntax_system).dim} "
        f"semantics dim={behavior_image(result.semantics_system).dim} "
        f"syntax==semantics: {str(result.preservation_equal).lower()}\n"
    )
    if result.close_dangling:
        out.write("closed terminals: " + " ".join(result.closed_terminals) + "\n")
    out.write("basis:\n")
    _print_basis(sub, out)
    return 0


def cmd_emergence(args, out) -> int:
    left = parse_netlist(_read(args.left))
    right = parse_netlist(_read(args.right))
    spec = parse_glue(_read(args.glue))
    observed = [v for v in args.observe.split(",") if v]
    report = emergence_report(
        left, right, spec, observed, close_dangling=True if args.close_dangling else None
    )
    if args.json:
        out.write(json.dumps(report.to_json(), indent=2) + "\n")
        return 0
    out.write(
        f"parts={report.parts_dim} whole={report.whole_dim} "
        f"emergent={str(report.emergent).lower()}\n"
    )
    return 0


def cmd_check(args, out) -> int:
    report = run_law(args.law, args.seed, args.trials)
    if args.json:
        out.write(json.dumps(report.to_json(), indent=2) + "\n")
        return 0 if report.ok else 1
    for suite in report.suites:
        status = "pass" if suite.ok else "FAIL"
        out.write(f"{report.law}: {suite.name}: {suite.passed}/{suite.total} {status}\n")
        for failure in suite.failures[:5]:
            out.write(f"  failed: {failure}\n")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="syscat",
        description="Exact behavioral-system composition over finite sets and rational vector spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("behavior", help="compile a netlist and print its behavior")
    p.add_argument("netlist")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_behavior)

    p = sub.add_parser("glue", help="interconnect two netlists along a glue spec")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("glue")
    p.add_argument("--close-dangling", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_glue)

    p = sub.add_parser("emergence", help="compare phenomes of parts against the whole")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("glue")
    p.add_argument("--observe", required=True, help="comma-separated variable names")
    p.add_argument("--close-dangling", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_emergence)

    p = sub.add_parser("check", help="run a law-check suite")
    p.add_argument("--law", required=True, choices=sorted(LAWS))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
