"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 parse/validation error (including
unreadable files and unknown grade labels), 3 method/cell mismatch.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Optional, Sequence

from . import tableio
from .engine import CellMismatchError, decide
from .grades import ScaleValidationError, UnknownGradeError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_MISMATCH = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(
        prog="softchoice",
        description="Score and rank the candidates of a decision table.",
    )
    commands = parser.add_subparsers(dest="command", required=True, metavar="command")
    decide_cmd = commands.add_parser(
        "decide",
        help="run one decision method over a table document",
        description=(
            "Score every candidate of the input table with the chosen method "
            "and report the winners."
        ),
    )
    decide_cmd.add_argument("--input", required=True, help="table document to score")
    decide_cmd.add_argument(
        "--method", required=True, choices=["binary", "grey", "neutrosophic"],
        help="aggregation method",
    )
    decide_cmd.add_argument(
        "--scale", default=None, metavar="PATH",
        help="grade-scale document (grey method only; built-in scale when omitted)",
    )
    decide_cmd.add_argument(
        "--criterion", default=None, choices=["optimistic", "conservative", "combined"],
        help="ranking criterion (neutrosophic method only; default: combined)",
    )
    decide_cmd.add_argument(
        "--epsilon", type=float, default=1e-9,
        help="tie tolerance for winner detection (default: 1e-9)",
    )
    decide_cmd.add_argument(
        "--format", default="text", choices=["text", "json"], dest="format_",
        metavar="{text,json}", help="report format (default: text)",
    )
    decide_cmd.add_argument(
        "--output", default=None, metavar="PATH",
        help="write the report here instead of standard output",
    )
    return parser


def _fail(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8", newline="") as handle:
        return handle.read()


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        options = parser.parse_args(argv)
    except _UsageError as exc:
        print(parser.format_usage(), end="", file=sys.stderr)
        return _fail(EXIT_USAGE, str(exc))
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    if not (isinstance(options.epsilon, float) and math.isfinite(options.epsilon)
            and options.epsilon > 0.0):
        return _fail(EXIT_USAGE, f"--epsilon must be a positive real, got {options.epsilon!r}")
    if options.scale is not None and options.method != "grey":
        return _fail(EXIT_USAGE, "--scale only applies to --method grey")
    if options.criterion is not None and options.method != "neutrosophic":
        return _fail(EXIT_USAGE, "--criterion only applies to --method neutrosophic")

    try:
        table_text = _read(options.input)
    except (OSError, UnicodeDecodeError) as exc:
        return _fail(EXIT_INVALID, f"cannot read {options.input}: {exc}")
    try:
        table = tableio.parse_table(table_text, source=options.input)
    except tableio.ParseError as exc:
        return _fail(EXIT_INVALID, str(exc))

    scale = None
    if options.scale is not None:
        try:
            scale_text = _read(options.scale)
        except (OSError, UnicodeDecodeError) as exc:
            return _fail(EXIT_INVALID, f"cannot read {options.scale}: {exc}")
        try:
            scale = tableio.parse_scale(scale_text, source=options.scale)
        except tableio.ParseError as exc:
            return _fail(EXIT_INVALID, str(exc))
        except ScaleValidationError as exc:
            return _fail(EXIT_INVALID, f"{options.scale}: {exc}")

    try:
        report = decide(
            table, options.method,
            scale=scale, criterion=options.criterion, epsilon=options.epsilon,
        )
    except CellMismatchError as exc:
        return _fail(EXIT_MISMATCH, f"{options.input}: {exc}")
    except (UnknownGradeError, ScaleValidationError) as exc:
        return _fail(EXIT_INVALID, f"{options.input}: {exc}")

    rendered = (
        tableio.render_report_text(report)
        if options.format_ == "text"
        else tableio.render_report_json(report)
    )
    if options.output is None:
        sys.stdout.write(rendered)
    else:
        try:
            with open(options.output, "w", encoding="utf-8", newline="") as handle:
                handle.write(rendered)
        except OSError as exc:
            return _fail(EXIT_INVALID, f"cannot write {options.output}: {exc}")
    return EXIT_OK


def main() -> None:
    raise SystemExit(run_cli())


if __name__ == "__main__":
    main()
