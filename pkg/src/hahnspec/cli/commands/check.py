"""Command implementation for the consistency check on a preset grid."""
from hahnspec.cli.display.formatters import display_census, display_violations
from hahnspec.cli.types import CheckCommandArgs, ExitCode
from hahnspec.cli.utils import create_config, pick
from hahnspec.scanning import get_preset, run_scan
from hahnspec.utils import FancyLogger

LOG = FancyLogger(__name__)


async def check_command(args: CheckCommandArgs) -> int:
    analysis = create_config(args.config)
    config = get_preset(
        args.grid_preset,
        boundary_tol=pick(args.boundary_tol, analysis.numerics.boundary_tol),
    )
    LOG.info(f"Checking consistency on the {args.grid_preset} grid ({config.nx}x{config.ny})")

    report = run_scan(config, analysis)
    display_violations(report.violation_details)
    display_census(report.region_census, report.goldberg_census)
    return ExitCode.VIOLATIONS if report.violations else ExitCode.OK
