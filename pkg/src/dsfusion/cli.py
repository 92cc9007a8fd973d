"""Command-line front end.

Three subcommands: ``fuse`` runs one condition (optionally printing a
combination table per fold step), ``sweep`` predicts every condition, and
``export-builtin`` writes a bundled scenario as an editable JSON document.

Exit codes: 0 success, 1 usage error (including unreadable files), 2
validation error, 3 total conflict.  Diagnostics go to stderr; stdout gets
either the complete report or nothing.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence

from .document import emit_scenario, parse_scenario, scenario_digest
from .errors import EvidenceError, TotalConflictError
from .render import (
    RunReport,
    fuse_csv,
    fuse_json,
    fuse_text,
    sweep_csv,
    sweep_json,
    sweep_text,
    worst_failure_exit,
)
from .scenario import (
    Scenario,
    SweepFailure,
    builtin_takraw_scenario,
    fusion_report,
    prediction_from_report,
    sweep,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_CONFLICT = 3

_FORMATS = ("table", "json", "csv")


def _precision(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"precision must be an integer, got {text!r}") from None
    if not 1 <= value <= 12:
        raise argparse.ArgumentTypeError("precision must be in 1..12")
    return value


def _add_source_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--scenario", metavar="PATH", help="scenario JSON document")
    group.add_argument("--builtin", choices=["takraw"], help="bundled scenario")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dsfusion",
        description="Dempster-Shafer evidence fusion for direction-prediction scenarios.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    fuse = commands.add_parser("fuse", help="fuse one condition and report the winner")
    _add_source_flags(fuse)
    fuse.add_argument(
        "--condition", type=int, required=True, metavar="N",
        help="1-based condition index",
    )
    fuse.add_argument(
        "--trace", action="store_true",
        help="print one combination table per fold step",
    )
    fuse.add_argument("--format", choices=_FORMATS, default="table")
    fuse.add_argument(
        "--precision", type=_precision, default=4, metavar="D",
        help="table decimal places, 1..12 (default 4)",
    )

    sweep_cmd = commands.add_parser("sweep", help="predict every condition")
    _add_source_flags(sweep_cmd)
    sweep_cmd.add_argument("--format", choices=_FORMATS, default="table")

    export = commands.add_parser(
        "export-builtin", help="write a bundled scenario as a JSON document",
    )
    export.add_argument("name", choices=["takraw"])
    export.add_argument("--out", required=True, metavar="PATH")

    return parser


def _load_scenario(args: argparse.Namespace) -> tuple[str, Scenario]:
    if args.builtin is not None:
        return f"builtin:{args.builtin}", builtin_takraw_scenario()
    with open(args.scenario, encoding="utf-8") as handle:
        text = handle.read()
    return args.scenario, parse_scenario(text)


def _cmd_fuse(args: argparse.Namespace) -> int:
    name, scenario = _load_scenario(args)
    report = fusion_report(scenario, args.condition)
    run = RunReport(
        scenario=scenario,
        scenario_name=name,
        scenario_digest=scenario_digest(scenario),
        condition=args.condition,
        report=report,
        prediction=prediction_from_report(report, args.condition),
    )
    if args.format == "json":
        output = fuse_json(run)
    elif args.format == "csv":
        output = fuse_csv(run)
    else:
        output = fuse_text(run, args.precision, args.trace)
    sys.stdout.write(output)
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    name, scenario = _load_scenario(args)
    results = sweep(scenario)
    if args.format == "json":
        output = sweep_json(results)
    elif args.format == "csv":
        output = sweep_csv(results)
    else:
        output = sweep_text(name, scenario_digest(scenario), results)
    sys.stdout.write(output)
    for result in results:
        if isinstance(result, SweepFailure):
            print(f"condition {result.condition}: {result.error}", file=sys.stderr)
    return worst_failure_exit(results)


def _cmd_export_builtin(args: argparse.Namespace) -> int:
    document = emit_scenario(builtin_takraw_scenario())
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write(document)
    return EXIT_OK


_COMMANDS = {
    "fuse": _cmd_fuse,
    "sweep": _cmd_sweep,
    "export-builtin": _cmd_export_builtin,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage problems
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TotalConflictError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFLICT
    except EvidenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
