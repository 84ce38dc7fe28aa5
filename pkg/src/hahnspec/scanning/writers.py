"""Serialization of scan reports.

CSV carries the fixed column set, JSON the config echo, census, violations
and one flat record per row, and PGM a gray-level map of the regions. All
three are byte-deterministic for a given report.
"""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Union

import numpy as np

from hahnspec.core import ComplexScalar, ConfigError, ReportIOError
from hahnspec.scanning.base import ScanConfig, ScanReport
from hahnspec.spectral_analysis import (ConsistencyViolation, Diagnostics,
                                        GoldbergState, PointClassification,
                                        SpectralRegion)
from hahnspec.utils import FancyLogger

LOG = FancyLogger(__name__)

PathLike = Union[str, Path]

CSV_COLUMNS = [
    "re", "im", "region", "goldberg",
    "in_ap", "in_delta", "in_co", "adjoint_eigen",
    "resolvent_bound", "growth_class",
]

PGM_LEVELS: Dict[SpectralRegion, int] = {
    SpectralRegion.RESOLVENT_SET: 255,
    SpectralRegion.CONTINUOUS_SPECTRUM: 128,
    SpectralRegion.RESIDUAL_SPECTRUM: 64,
    SpectralRegion.POINT_SPECTRUM: 0,
}

# JSON-only diagnostics, written after the CSV columns
EXTRA_FIELDS = [
    "bound_convergent", "bound_converged", "bound_exceeded", "column_bound", "growth_ratio",
    "adjoint_test_value", "adjoint_verdict", "adjoint_exceeded", "note",
]


def row_record(row: PointClassification) -> Dict[str, Any]:
    d = row.diagnostics or Diagnostics()
    return {
        "re": row.alpha.re,
        "im": row.alpha.im,
        "region": row.region.value,
        "goldberg": row.goldberg.label if row.goldberg else None,
        "in_ap": row.in_ap,
        "in_delta": row.in_delta,
        "in_co": row.in_co,
        "adjoint_eigen": row.adjoint_eigen,
        "resolvent_bound": d.resolvent_bound,
        "growth_class": d.growth_class.value if d.growth_class else None,
        "bound_convergent": d.bound_convergent,
        "bound_converged": d.bound_converged,
        "bound_exceeded": d.bound_exceeded,
        "column_bound": d.column_bound,
        "growth_ratio": d.growth_ratio,
        "adjoint_test_value": d.adjoint_test_value,
        "adjoint_verdict": d.adjoint_verdict.value if d.adjoint_verdict else None,
        "adjoint_exceeded": d.adjoint_exceeded,
        "note": d.note,
    }


def record_row(record: Dict[str, Any]) -> PointClassification:
    diagnostic_fields = {
        "resolvent_bound": record.get("resolvent_bound"),
        "growth_class": record.get("growth_class"),
        **{name: record.get(name) for name in EXTRA_FIELDS},
    }
    present = {k: v for k, v in diagnostic_fields.items() if v is not None}
    return PointClassification(
        alpha=ComplexScalar(re=record["re"], im=record["im"]),
        region=SpectralRegion(record["region"]),
        goldberg=GoldbergState.from_label(record["goldberg"]) if record.get("goldberg") else None,
        in_ap=record["in_ap"],
        in_delta=record["in_delta"],
        in_co=record["in_co"],
        adjoint_eigen=record["adjoint_eigen"],
        diagnostics=Diagnostics(**present) if present else None,
    )


def format_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def render_csv(report: ScanReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in report.rows:
        record = row_record(row)
        writer.writerow([format_cell(record[column]) for column in CSV_COLUMNS])
    return buffer.getvalue()


def render_json(report: ScanReport) -> str:
    document = {
        "config": report.config.model_dump(mode="json"),
        "census": report.region_census,
        "goldberg_census": report.goldberg_census,
        "violations": report.violations,
        "violation_details": [v.model_dump(mode="json") for v in report.violation_details],
        "rows": [row_record(row) for row in report.rows],
    }
    # allow_nan keeps divergent bounds as Infinity instead of null
    return json.dumps(document, indent=2, allow_nan=True) + "\n"


def render_pgm(report: ScanReport) -> bytes:
    header = f"P5\n{report.config.nx} {report.config.ny}\n255\n".encode("ascii")
    pixels = np.array([PGM_LEVELS[row.region] for row in report.rows], dtype=np.uint8)
    return header + pixels.tobytes()


def _write(path: PathLike, payload: Union[str, bytes]) -> None:
    path = Path(path)
    try:
        if isinstance(payload, bytes):
            path.write_bytes(payload)
        else:
            path.write_text(payload, encoding="utf-8", newline="")
    except OSError as e:
        raise ReportIOError(path, e.strerror or str(e)) from e
    LOG.debug(f"wrote {len(payload)} bytes to {path}")


def write_csv(report: ScanReport, path: PathLike) -> None:
    _write(path, render_csv(report))


def write_json(report: ScanReport, path: PathLike) -> None:
    _write(path, render_json(report))


def write_pgm(report: ScanReport, path: PathLike) -> None:
    _write(path, render_pgm(report))


def read_json(path: PathLike) -> ScanReport:
    """Rebuild a report from write_json output."""
    path = Path(path)
    try:
        document = json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise ReportIOError(path, e.strerror or str(e)) from e
    except json.JSONDecodeError as e:
        raise ReportIOError(path, f"invalid JSON: {e}") from e

    try:
        return ScanReport(
            config=ScanConfig.model_validate(document["config"]),
            rows=[record_row(record) for record in document["rows"]],
            violation_details=[
                ConsistencyViolation.model_validate(v)
                for v in document.get("violation_details", [])
            ],
        )
    except (KeyError, ValueError) as e:
        raise ReportIOError(path, f"not a scan report: {e}") from e


WRITERS: Dict[str, Callable[[ScanReport, PathLike], None]] = {
    "csv": write_csv,
    "json": write_json,
    "pgm": write_pgm,
}


def write_report(report: ScanReport, path: Optional[PathLike] = None, format: Optional[str] = None) -> Path:
    """Write with the writer for ``format`` (default: the config's)."""
    format = format or report.config.format
    path = path or report.config.output_path
    if path is None:
        raise ConfigError("no output path given", field="output_path")
    if format not in WRITERS:
        raise ValueError(f"Unknown report format: {format}")
    WRITERS[format](report, path)
    return Path(path)
