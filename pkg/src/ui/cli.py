#!/usr/bin/env python3
"""CLI entry point for the safer C library.

Two commands:
    safec lint [--file PATH | --format STRING]
    safec demo (stdio|string) [--handler abort|ignore]

Diagnostics go to standard error, payload to standard output. Exit status is
0 when clean, 1 when a violation was found, 2 on usage or I/O errors.
"""

import argparse
import sys
from pathlib import Path
from typing import Optional

import yaml
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from src.config.models import CliConfig, SafeCConfig, load_config
from src.config.runtime import configure_engine, configure_logging
from src.constraints.handlers import (
    get_abort_status,
    get_constraint_handler,
    get_last_error,
    resolve_handler,
    set_abort_status,
    set_constraint_handler,
)
from src.core.errors import ErrorKind
from src.formatting.directives import directives_of, parse_directives
from src.formatting.validation import validate_format_n
from src.infrastructure.logging_config import get_logger
from src.infrastructure.metrics import get_metrics
from src.stdio_s.streams import ByteSink, stdout_sink
from src.ui.demo import run_stdio_demo, run_string_demo

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

__version__ = "0.1.0"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="safec",
        description="Bounds-checked C library runtime - format linter and demo transcripts",
    )
    parser.add_argument(
        "--config", "-c",
        type=Path,
        default=Path("config.yaml"),
        help="Configuration file (default: config.yaml, missing = defaults)",
    )
    parser.add_argument(
        "--metrics-file",
        type=Path,
        default=None,
        help="Write prometheus metrics to this file on exit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    lint = sub.add_parser("lint", help="Audit printf-style format strings, one per line")
    source = lint.add_mutually_exclusive_group()
    source.add_argument("--file", "-f", type=Path, help="Read formats from a file")
    source.add_argument("--format", type=str, help="Audit a single inline format")
    lint.add_argument("--handler", choices=["abort", "ignore"], default=None,
                      help="abort stops at the first violation (default), ignore reports all")
    lint.add_argument("--summary", action="store_true", help="Print a summary table to stderr")

    demo = sub.add_parser("demo", help="Replay a test-program transcript")
    demo.add_argument("target", choices=["stdio", "string"])
    demo.add_argument("--handler", choices=["abort", "ignore"], default=None,
                      help="Constraint handler for the run (default: ignore)")
    demo.add_argument("--sloppy", type=str, default=None,
                      help="stdio only: untrusted format passed straight to printf_s")
    return parser


def _read_lint_input(cli: CliConfig) -> list[bytes]:
    if cli.format is not None:
        data = cli.format.encode("utf-8")
    elif cli.file is not None:
        data = cli.file.read_bytes()
    else:
        data = sys.stdin.buffer.read()
    return data.splitlines()


def cmd_lint(cli: CliConfig, config: SafeCConfig, out: ByteSink, console: Console) -> int:
    """Check each line for %n and malformed directives.

    Returns:
        0 if every line is clean, 1 otherwise
    """
    try:
        lines = _read_lint_input(cli)
    except OSError as e:
        console.print(f"[red]Cannot read input: {e}[/red]")
        return EXIT_USAGE

    handler_name = cli.effective_handler(config)
    configure_engine(config, handler_name)
    if handler_name == "abort":
        # First violation ends the run with the violation status
        set_abort_status(EXIT_VIOLATION)

    function = config.lint.function_name
    metrics = get_metrics()
    clean = violations = 0
    for line in lines:
        code = validate_format_n(function, line)
        metrics.record_lint_line(ok=not code)
        if code:
            violations += 1
            continue
        count = sum(1 for d in directives_of(parse_directives(line)) if d.conversion != "%")
        out.write(f"OK {count}\n".encode("ascii"))
        clean += 1
    out.flush()

    if cli.summary:
        table = Table(title="lint summary")
        table.add_column("lines", justify="right")
        table.add_column("ok", justify="right", style="green")
        table.add_column("violations", justify="right", style="red")
        table.add_row(str(len(lines)), str(clean), str(violations))
        console.print(table)

    logger.info(f"lint checked {len(lines)} lines, {violations} violations")
    return EXIT_VIOLATION if violations else EXIT_OK


def cmd_demo(cli: CliConfig, config: SafeCConfig, out: ByteSink) -> int:
    """Run one demo transcript with the configured handler."""
    set_abort_status(config.constraints.abort_status)
    handler = resolve_handler(cli.effective_handler(config))
    if cli.target == "string":
        run_string_demo(out, handler=handler)
    else:
        sloppy = cli.sloppy.encode("utf-8") if cli.sloppy is not None else None
        run_stdio_demo(out, handler=handler, sloppy=sloppy)
    out.flush()
    logger.info(f"demo {cli.target} finished, last error {ErrorKind(get_last_error()).name}")
    return EXIT_OK


def main(argv: Optional[list[str]] = None) -> int:
    """Main entry point for the safec CLI.

    Example:
        $ safec lint --format 'count = %d%n'
        lint(): invalid format parameter (%n)
        $ safec demo string
    """
    args = build_parser().parse_args(argv)
    console = Console(stderr=True)

    try:
        config = load_config(args.config)
        cli = CliConfig(
            command=args.command,
            handler=args.handler,
            file=getattr(args, "file", None),
            format=getattr(args, "format", None),
            target=getattr(args, "target", None),
            sloppy=getattr(args, "sloppy", None),
            metrics_file=args.metrics_file or config.monitoring.metrics_file,
            summary=getattr(args, "summary", False),
        )
    except (ValidationError, yaml.YAMLError, ValueError) as e:
        console.print(f"[red]Invalid configuration:[/red] {escape(str(e))}")
        return EXIT_USAGE

    configure_logging(config)
    metrics = get_metrics()
    metrics.register_build(__version__, command=cli.command)

    out = stdout_sink()
    previous_handler = get_constraint_handler()
    previous_status = get_abort_status()
    try:
        configure_engine(config)
        if cli.command == "lint":
            return cmd_lint(cli, config, out, console)
        return cmd_demo(cli, config, out)
    finally:
        set_constraint_handler(previous_handler)
        set_abort_status(previous_status)
        if cli.metrics_file is not None:
            metrics.export_to_file(cli.metrics_file)


if __name__ == "__main__":
    sys.exit(main())
