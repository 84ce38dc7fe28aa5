import csv
import json
from collections import deque

import pytest

from hahnspec.core import ConfigError, ReportIOError
from hahnspec.scanning import (CSV_COLUMNS, ScanConfig, read_json, render_csv,
                               render_json, run_scan, write_csv, write_json,
                               write_pgm, write_report)

HEADER = "re,im,region,goldberg,in_ap,in_delta,in_co,adjoint_eigen,resolvent_bound,growth_class"


def single_point(re: float, **kwargs) -> ScanConfig:
    return ScanConfig(re_min=re, re_max=re + 1, im_min=0, im_max=1, nx=1, ny=1, **kwargs)


def triplet(**kwargs) -> ScanConfig:
    return ScanConfig(re_min=0, re_max=2, im_min=0, im_max=1, nx=3, ny=1, **kwargs)


def parse_pgm(payload: bytes):
    magic, dims, maxval, pixels = payload.split(b"\n", 3)
    width, height = (int(v) for v in dims.split())
    return magic, width, height, int(maxval), pixels


def non_white_components(pixels: bytes, width: int, height: int) -> int:
    seen = set()
    components = 0
    for start in range(width * height):
        if pixels[start] == 255 or start in seen:
            continue
        components += 1
        queue = deque([start])
        seen.add(start)
        while queue:
            index = queue.popleft()
            y, x = divmod(index, width)
            for ny, nx in ((y - 1, x), (y + 1, x), (y, x - 1), (y, x + 1)):
                neighbour = ny * width + nx
                if 0 <= ny < height and 0 <= nx < width and neighbour not in seen and pixels[neighbour] != 255:
                    seen.add(neighbour)
                    queue.append(neighbour)
    return components


class TestCsv:
    def test_single_point(self, tmp_path):
        path = tmp_path / "scan.csv"
        write_csv(run_scan(single_point(3)), path)
        lines = path.read_text().splitlines()
        assert len(lines) == 2
        assert lines[0] == HEADER
        assert lines[1].startswith("3,0,resolvent,A1,0,0,0,0,")

    def test_triplet(self, tmp_path):
        path = tmp_path / "scan.csv"
        write_csv(run_scan(triplet()), path)
        assert path.read_text() == "\n".join([
            HEADER,
            "0,0,continuous,B2,1,1,0,0,,",
            "1,0,residual,C2,1,1,1,1,,",
            "2,0,continuous,B2,1,1,0,0,,",
        ]) + "\n"

    def test_numerics_columns(self, tmp_path):
        path = tmp_path / "scan.csv"
        write_csv(run_scan(triplet(with_numerics=True, truncation=16)), path)
        with open(path, newline="") as f:
            rows = list(csv.DictReader(f))
        assert list(rows[0]) == CSV_COLUMNS
        assert rows[1]["resolvent_bound"] == ""
        assert rows[2]["growth_class"] == "growing"
        assert float(rows[2]["resolvent_bound"]) > 0

    def test_seventeen_significant_digits(self):
        report = run_scan(ScanConfig(re_min=0, re_max=0.3, im_min=0, im_max=1, nx=4, ny=1))
        value = report.rows[1].alpha.re
        field = render_csv(report).splitlines()[2].split(",")[0]
        assert field == format(value, ".17g")
        assert float(field) == value

    def test_unwritable_path(self, tmp_path):
        with pytest.raises(ReportIOError) as exc_info:
            write_csv(run_scan(single_point(3)), tmp_path / "missing" / "scan.csv")
        assert exc_info.value.path == tmp_path / "missing" / "scan.csv"


class TestPgm:
    def test_resolvent_pixel(self, tmp_path):
        path = tmp_path / "scan.pgm"
        write_pgm(run_scan(single_point(3)), path)
        assert path.read_bytes() == b"P5\n1 1\n255\n\xff"

    def test_residual_pixel(self, tmp_path):
        path = tmp_path / "scan.pgm"
        write_pgm(run_scan(single_point(1)), path)
        assert path.read_bytes()[-1:] == b"\x40"

    def test_triplet_bytes(self, tmp_path):
        path = tmp_path / "scan.pgm"
        write_pgm(run_scan(triplet()), path)
        assert path.read_bytes() == b"P5\n3 1\n255\n" + bytes([128, 64, 128])

    def test_reference_disk_is_one_region(self, tmp_path, reference_config):
        """Test that the non-white pixels of the reference map form one connected disk."""
        path = tmp_path / "reference.pgm"
        write_pgm(run_scan(reference_config), path)
        payload = path.read_bytes()
        magic, width, height, maxval, pixels = parse_pgm(payload)
        assert (magic, width, height, maxval) == (b"P5", 41, 41, 255)
        assert len(pixels) == 41 * 41
        assert len(payload) == len(b"P5\n41 41\n255\n") + 41 * 41
        assert non_white_components(pixels, width, height) == 1
        assert pixels.count(bytes([64])) == 305


class TestJson:
    def test_reference_document(self, tmp_path, reference_config):
        path = tmp_path / "reference.json"
        write_json(run_scan(reference_config), path)
        document = json.loads(path.read_text())
        assert document["violations"] == 0
        assert sum(document["census"].values()) == 41 * 41
        assert list(document) == ["config", "census", "goldberg_census", "violations", "violation_details", "rows"]
        assert list(document["rows"][0])[:len(CSV_COLUMNS)] == CSV_COLUMNS

    def test_round_trip_regenerates_identical_csv(self, tmp_path):
        report = run_scan(ScanConfig(re_min=-0.5, re_max=2.5, im_min=-1.5, im_max=1.5, nx=11, ny=11, with_numerics=True, truncation=32))
        write_json(report, tmp_path / "scan.json")
        write_csv(report, tmp_path / "direct.csv")
        write_csv(read_json(tmp_path / "scan.json"), tmp_path / "regenerated.csv")
        assert (tmp_path / "direct.csv").read_bytes() == (tmp_path / "regenerated.csv").read_bytes()

    def test_repeated_runs_are_byte_identical(self, tmp_path):
        for name in ("a", "b"):
            report = run_scan(triplet(with_numerics=True))
            write_json(report, tmp_path / f"{name}.json")
            write_pgm(report, tmp_path / f"{name}.pgm")
        assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()
        assert (tmp_path / "a.pgm").read_bytes() == (tmp_path / "b.pgm").read_bytes()

    def test_divergence_threshold_changes_rows(self):
        rows = {}
        for threshold in (1.0, 1e300):
            report = run_scan(single_point(3, with_numerics=True, divergence_threshold=threshold))
            rows[threshold] = json.loads(render_json(report))["rows"][0]
        assert rows[1.0]["bound_exceeded"] is True
        assert rows[1e300]["bound_exceeded"] is False
        assert rows[1.0]["bound_converged"] is True

    def test_read_missing_file(self, tmp_path):
        with pytest.raises(ReportIOError):
            read_json(tmp_path / "absent.json")

    def test_read_malformed_file(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"rows": []}')
        with pytest.raises(ReportIOError):
            read_json(path)


class TestWriteReport:
    def test_dispatches_on_config_format(self, tmp_path):
        path = tmp_path / "scan.pgm"
        report = run_scan(single_point(3, format="pgm", output_path=str(path)))
        assert write_report(report) == path
        assert path.read_bytes().startswith(b"P5\n")

    def test_missing_output_path(self):
        with pytest.raises(ConfigError):
            write_report(run_scan(single_point(3)))
