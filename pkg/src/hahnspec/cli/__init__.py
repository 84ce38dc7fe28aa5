"""CLI entry points for hahnspec."""
import asyncio
import sys
from typing import Optional, Sequence

from hahnspec.cli.argparser import parse_args
from hahnspec.cli.types import ExitCode
from hahnspec.core import ConfigError, ReportIOError
from hahnspec.utils import FancyLogger

LOG = FancyLogger(__name__)


async def main(args: Optional[Sequence[str]] = None) -> int:
    """Main CLI entry point.

    Args:
        args: Command line arguments. If None, sys.argv[1:] is used.

    Returns:
        Exit code: 0 success, 1 argument or config error, 2 report IO error,
        3 consistency violations
    """
    try:
        parsed_args = parse_args(args)
    except ConfigError as e:
        LOG.error(f"Error: {e}")
        return ExitCode.CONFIG_ERROR

    # Setup logging
    if parsed_args.verbose:
        LOG.setLevel("DEBUG")

    try:
        return int(await parsed_args.command_func(parsed_args))
    except ReportIOError as e:
        LOG.error(f"Error: {e}")
        return ExitCode.IO_ERROR
    except Exception as e:
        LOG.error(f"Error: {str(e)}")
        if parsed_args.verbose:
            import traceback
            traceback.print_exc()
        return ExitCode.CONFIG_ERROR

def cli_main() -> None:
    """Entry point for CLI scripts."""
    exit_code = asyncio.run(main())
    sys.exit(exit_code)
