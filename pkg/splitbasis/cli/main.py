"""splitbasis CLI: partition lattices, splitting bases and their certificates."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from pydantic import ValidationError

from splitbasis import __version__
from splitbasis.geometry import GeometryError
from splitbasis.lattices import Family, LatticeError
from splitbasis.workbench import (
    DEFAULT_SUITE,
    Command,
    OutputFormat,
    OutputOptions,
    RunConfig,
    SuiteParseError,
    emit,
    load_suite,
    run,
    run_suite,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _config(args: argparse.Namespace, command: Command) -> RunConfig:
    return RunConfig(
        command=command,
        family=args.family,
        n=args.n,
        T=args.T,
        vector=args.vector,
        indices=getattr(args, "indices", "theorem"),
        cross_check=getattr(args, "cross_check", False),
        fault=getattr(args, "fault", None),
        max_n=args.max_n,
    )


def _options(args: argparse.Namespace) -> OutputOptions:
    return OutputOptions(format=args.format, out=args.out, timing=not args.no_timing)


def _run_and_emit(args: argparse.Namespace, command: Command) -> int:
    cfg = _config(args, command)
    options = _options(args)
    report = run(cfg, timing=options.timing)
    emit(report, options)
    if options.out is not None:
        print(f"[{'OK' if report.passed else 'FAIL'}] {report.instance} -> {options.out}")
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_lattice(args: argparse.Namespace) -> int:
    """Build one lattice and report elements, covers, μ and homology."""
    return _run_and_emit(args, Command.LATTICE)


def cmd_basis(args: argparse.Namespace) -> int:
    """Verify a splitting basis (e.g. splitbasis basis --family A --n 4)."""
    return _run_and_emit(args, Command.BASIS)


def cmd_regions(args: argparse.Namespace) -> int:
    return _run_and_emit(args, Command.REGIONS)


def cmd_orbits(args: argparse.Namespace) -> int:
    return _run_and_emit(args, Command.ORBITS)


def cmd_suite(args: argparse.Namespace) -> int:
    """Run every row of a suite file; exit 0 only if each row meets its expectation."""
    suite = load_suite(Path(args.suite))
    options = _options(args)
    report = run_suite(suite, include_slow=args.slow, timing=options.timing)
    emit(report, options)
    if options.out is not None:
        print(f"[{'OK' if report.passed else 'FAIL'}] {report.summary()} -> {options.out}")
    return EXIT_OK if report.passed else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitbasis",
        description="Splitting bases for the homology of partition lattices",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command")

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--format", choices=[f.value for f in OutputFormat], default="text")
    output.add_argument("--out", type=Path, help="Write the report here instead of stdout")
    output.add_argument("--no-timing", action="store_true", help="Report millis as 0")

    instance = argparse.ArgumentParser(add_help=False)
    instance.add_argument("--family", choices=[f.value for f in Family], default="A")
    instance.add_argument("--n", type=int, required=True)
    instance.add_argument("--T", dest="T", default="", help="Comma list, e.g. 1,2")
    instance.add_argument("--vector", default=None, help="Comma list of rationals, e.g. 1,2,4")
    instance.add_argument("--max-n", type=int, default=None, help="Override the desk-scale ceiling")

    sub.add_parser("lattice", parents=[instance, output], help="Build a partition lattice")
    p = sub.add_parser("basis", parents=[instance, output], help="Verify a splitting basis")
    p.add_argument("--indices", choices=["theorem", "all", "ltr"], default="theorem")
    p.add_argument("--cross-check", action="store_true", help="Compare cycles with kernels")
    p.add_argument("--fault", choices=["sign_flip"], default=None)
    sub.add_parser("regions", parents=[instance, output], help="Bounded-region table")
    sub.add_parser("orbits", parents=[instance, output], help="Young subgroup orbits on AT")
    p = sub.add_parser("suite", parents=[output], help="Run a verification suite")
    p.add_argument("--suite", default=str(DEFAULT_SUITE), help="Path to a .suite.yaml file")
    p.add_argument("--slow", action="store_true", help="Include rows marked slow")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    commands = {
        "lattice": cmd_lattice,
        "basis": cmd_basis,
        "regions": cmd_regions,
        "orbits": cmd_orbits,
        "suite": cmd_suite,
    }
    handler = commands.get(args.command)
    if handler is None:
        parser.print_help()
        return EXIT_USAGE
    try:
        return handler(args)
    except ValidationError as e:
        for err in e.errors():
            loc = " → ".join(str(part) for part in err.get("loc", []))
            where = f"[{loc}] " if loc else ""
            print(f"Error: {where}{err['msg']}", file=sys.stderr)
        return EXIT_USAGE
    except (LatticeError, GeometryError, SuiteParseError, FileNotFoundError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
