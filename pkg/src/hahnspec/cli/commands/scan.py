"""Command implementation for complex-plane scans."""
from hahnspec.cli.display.formatters import display_census
from hahnspec.cli.types import ScanCommandArgs, ExitCode
from hahnspec.cli.utils import create_config, pick
from hahnspec.scanning import ScanConfig, run_scan, write_report
from hahnspec.utils import FancyLogger

LOG = FancyLogger(__name__)


async def scan_command(args: ScanCommandArgs) -> int:
    """Execute the scan command.

    Args:
        args: Typed command line arguments

    Returns:
        0 on a clean scan, 3 when the consistency suite found violations
    """
    analysis = create_config(args.config)

    config = ScanConfig.create(
        re_min=args.re_min,
        re_max=args.re_max,
        im_min=args.im_min,
        im_max=args.im_max,
        nx=args.nx,
        ny=args.ny,
        truncation=args.truncation,
        column=args.column,
        boundary_tol=pick(args.boundary_tol, analysis.numerics.boundary_tol),
        divergence_threshold=pick(args.divergence_threshold, analysis.numerics.divergence_threshold),
        with_numerics=args.with_numerics,
        output_path=str(args.out),
        format=args.format,
    )
    LOG.info(f"Scanning {config.nx}x{config.ny} points over "
             f"[{config.re_min}, {config.re_max}] x [{config.im_min}, {config.im_max}]")

    report = run_scan(config, analysis)
    path = write_report(report)
    LOG.info(f"Wrote {config.format} report to {path}")

    display_census(report.region_census, report.goldberg_census)
    if report.violations:
        LOG.warning(f"{report.violations} consistency violations")
        return ExitCode.VIOLATIONS
    return ExitCode.OK
