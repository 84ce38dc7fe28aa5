"""Argument parsing for the hahnspec CLI."""
import argparse
from pathlib import Path
from typing import NoReturn, Optional, Sequence, Union

from hahnspec.cli.commands.check import check_command
from hahnspec.cli.commands.scan import scan_command
from hahnspec.cli.types import CheckCommandArgs, ScanCommandArgs
from hahnspec.configs import DEFAULT_TRUNCATION
from hahnspec.core import ConfigError
from hahnspec.scanning import GRID_PRESETS


class ArgumentParser(argparse.ArgumentParser):
    """argparse parser that raises ConfigError instead of exiting with status 2."""

    def error(self, message: str) -> NoReturn:
        raise ConfigError(f"{self.prog}: {message}")


def _convert_to_args(parsed_namespace: argparse.Namespace) -> Union[ScanCommandArgs, CheckCommandArgs]:
    """Convert parsed namespace to typed arguments."""
    base_args = {
        "verbose": parsed_namespace.verbose,
        "config": parsed_namespace.config,
        "command": parsed_namespace.command,
    }

    if parsed_namespace.command == "scan":
        args = ScanCommandArgs(
            **base_args,
            re_min=parsed_namespace.re_min,
            re_max=parsed_namespace.re_max,
            im_min=parsed_namespace.im_min,
            im_max=parsed_namespace.im_max,
            nx=parsed_namespace.nx,
            ny=parsed_namespace.ny,
            out=parsed_namespace.out,
            format=parsed_namespace.format,
            truncation=parsed_namespace.truncation,
            column=parsed_namespace.column,
            with_numerics=parsed_namespace.with_numerics,
            boundary_tol=parsed_namespace.boundary_tol,
            divergence_threshold=parsed_namespace.divergence_threshold,
        )
        args.command_func = scan_command
    elif parsed_namespace.command == "check":
        args = CheckCommandArgs(
            **base_args,
            grid_preset=parsed_namespace.grid_preset,
            boundary_tol=parsed_namespace.boundary_tol,
        )
        args.command_func = check_command
    else:
        raise ConfigError(f"Unknown command: {parsed_namespace.command}", field="command")

    return args

def _create_scan_parser(subparsers):
    """Create the parser for the 'scan' command."""
    scan_parser = subparsers.add_parser(
        "scan",
        help="Classify a complex-plane rectangle and write a CSV/JSON/PGM report"
    )
    for flag, name in [("--re-min", "re_min"), ("--re-max", "re_max"),
                       ("--im-min", "im_min"), ("--im-max", "im_max")]:
        scan_parser.add_argument(flag, dest=name, type=float, required=True,
                                 help=f"Rectangle corner {name}")
    scan_parser.add_argument("--nx", type=int, required=True, help="Lattice points along re")
    scan_parser.add_argument("--ny", type=int, required=True, help="Lattice points along im")
    scan_parser.add_argument(
        "--truncation",
        type=int,
        default=DEFAULT_TRUNCATION,
        help=f"Finite-section size for numerics (default: {DEFAULT_TRUNCATION})"
    )
    scan_parser.add_argument(
        "--column",
        type=int,
        default=0,
        help="Resolvent column watched by the growth test (default: 0)"
    )
    scan_parser.add_argument(
        "--with-numerics",
        action="store_true",
        help="Attach finite-section diagnostics to every row"
    )
    scan_parser.add_argument(
        "--boundary-tol",
        type=float,
        default=None,
        help="Band around |1 - alpha| = 1 treated as the circle"
    )
    scan_parser.add_argument(
        "--divergence-threshold",
        type=float,
        default=None,
        help="Values above this count as divergent"
    )
    scan_parser.add_argument(
        "--format",
        type=str,
        choices=["csv", "json", "pgm"],
        default="csv",
        help="Report format (default: csv)"
    )
    scan_parser.add_argument(
        "--out",
        type=Path,
        required=True,
        help="Report path"
    )
    return scan_parser

def _create_check_parser(subparsers):
    """Create the parser for the 'check' command."""
    check_parser = subparsers.add_parser(
        "check",
        help="Run the consistency suite on a preset grid"
    )
    check_parser.add_argument(
        "--grid-preset",
        type=str,
        choices=sorted(GRID_PRESETS),
        default="reference",
        help="Grid to check (default: reference)"
    )
    check_parser.add_argument(
        "--boundary-tol",
        type=float,
        default=None,
        help="Band around |1 - alpha| = 1 treated as the circle"
    )
    return check_parser

def create_parser() -> ArgumentParser:
    """Create the main argument parser."""
    parser = ArgumentParser(
        prog="hahnspec",
        description="hahnspec - fine spectrum of the difference operator on the Hahn space",
        formatter_class=argparse.RawDescriptionHelpFormatter
    )

    # Global options
    parser.add_argument(
        "--verbose", "-v",
        action="store_true",
        help="Enable verbose output"
    )

    parser.add_argument(
        "--config",
        type=Path,
        help="Path to an analysis configuration JSON file",
        default=None
    )

    # Subcommands
    subparsers = parser.add_subparsers(
        title="commands",
        description="Available commands",
        dest="command"
    )
    subparsers.required = True

    _create_scan_parser(subparsers)
    _create_check_parser(subparsers)

    return parser

def parse_args(args: Optional[Sequence[str]] = None) -> Union[ScanCommandArgs, CheckCommandArgs]:
    """Parse command line arguments into typed objects."""
    parser = create_parser()
    parsed_namespace = parser.parse_args(args)
    return _convert_to_args(parsed_namespace)
