from .base import ReportFormat, ScanConfig, ScanReport
from .presets import GRID_PRESETS, get_preset
from .runner import ScanRunner, axis_values, grid_points, run_scan
from .writers import (CSV_COLUMNS, PGM_LEVELS, read_json, render_csv,
                      render_json, render_pgm, write_csv, write_json,
                      write_pgm, write_report)

__all__ = [
    "ScanConfig",
    "ScanReport",
    "ReportFormat",
    "ScanRunner",
    "run_scan",
    "grid_points",
    "axis_values",
    "GRID_PRESETS",
    "get_preset",
    "CSV_COLUMNS",
    "PGM_LEVELS",
    "render_csv",
    "render_json",
    "render_pgm",
    "write_csv",
    "write_json",
    "write_pgm",
    "write_report",
    "read_json",
]
