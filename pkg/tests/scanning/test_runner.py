import numpy as np
import pytest

from hahnspec.configs import AnalysisConfig, ScanSettings
from hahnspec.core import ConfigError
from hahnspec.scanning import (ScanConfig, axis_values, get_preset, grid_points,
                               render_csv, run_scan)
from hahnspec.spectral_analysis import GrowthClass


def single_point(re: float, im: float = 0.0, **kwargs) -> ScanConfig:
    return ScanConfig(re_min=re, re_max=re + 1, im_min=im, im_max=im + 1, nx=1, ny=1, **kwargs)


def real_axis_triplet(**kwargs) -> ScanConfig:
    return ScanConfig(re_min=0, re_max=2, im_min=0, im_max=1, nx=3, ny=1, **kwargs)


class TestScanConfig:
    @pytest.mark.parametrize("overrides, field", [
        ({"re_max": -1.0}, "re_max"),
        ({"im_max": -2.0}, "im_max"),
        ({"nx": 0}, "nx"),
        ({"ny": -3}, "ny"),
        ({"truncation": 0}, "truncation"),
        ({"boundary_tol": 0.0}, "boundary_tol"),
        ({"format": "png"}, "format"),
    ])
    def test_invalid_config_names_the_field(self, overrides, field):
        kwargs = dict(re_min=0.0, re_max=1.0, im_min=0.0, im_max=1.0, nx=2, ny=2)
        kwargs.update(overrides)
        with pytest.raises(ConfigError) as exc_info:
            ScanConfig.create(**kwargs)
        assert exc_info.value.field == field

    def test_unknown_preset(self):
        with pytest.raises(ConfigError):
            get_preset("nowhere")


class TestLattice:
    def test_axis_is_endpoint_inclusive(self):
        np.testing.assert_array_equal(axis_values(0.0, 2.0, 3), [0.0, 1.0, 2.0])
        np.testing.assert_array_equal(axis_values(0.0, 2.0, 3, descending=True), [2.0, 1.0, 0.0])

    def test_single_point_axis_uses_min(self):
        assert axis_values(3.0, 4.0, 1).tolist() == [3.0]
        assert axis_values(3.0, 4.0, 1, descending=True).tolist() == [3.0]

    def test_reference_lattice_hits_the_circle_exactly(self, reference_config):
        points = [complex(p) for p in grid_points(reference_config)]
        assert 0j in points and 2 + 0j in points and 1 + 1j in points and 1 - 1j in points

    def test_row_major_image_order(self):
        config = ScanConfig(re_min=0, re_max=1, im_min=0, im_max=2, nx=2, ny=3)
        points = [complex(p) for p in grid_points(config)]
        assert points == [2j, 1 + 2j, 1j, 1 + 1j, 0, 1]


class TestRunScan:
    def test_single_resolvent_point(self):
        report = run_scan(single_point(3))
        assert len(report.rows) == 1
        assert report.region_census == {"resolvent": 1, "point": 0, "continuous": 0, "residual": 0}
        assert report.violations == 0

    def test_real_axis_triplet(self):
        report = run_scan(real_axis_triplet())
        assert report.region_census["continuous"] == 2
        assert report.region_census["residual"] == 1
        assert [row.region.value for row in report.rows] == ["continuous", "residual", "continuous"]

    def test_reference_grid_census(self, reference_config):
        """Test the exact counts: 317 lattice points in the closed disk, 12 on the circle."""
        report = run_scan(reference_config)
        assert len(report.rows) == 41 * 41
        assert report.violations == 0
        assert report.region_census == {"resolvent": 1364, "point": 0, "continuous": 12, "residual": 305}
        assert report.goldberg_census == {"A1": 1364, "B2": 12, "C2": 305}
        assert sum(report.region_census.values()) == 41 * 41

    def test_residual_fraction_matches_disk_area(self, reference_config):
        report = run_scan(reference_config)
        cell = 0.1
        expected = np.pi / cell ** 2
        boundary_cells = 2 * np.pi / cell
        assert abs(report.region_census["residual"] - expected) <= 2 * boundary_cells

    def test_numerics_are_attached(self):
        report = run_scan(real_axis_triplet(with_numerics=True, truncation=32))
        origin, singular, boundary = report.rows
        assert boundary.diagnostics.growth_class == GrowthClass.GROWING
        # the resolvent of Delta itself is the prefix-sum matrix, whose column differences vanish
        assert origin.diagnostics.growth_class == GrowthClass.SATURATING
        assert singular.diagnostics.note is not None
        assert singular.diagnostics.resolvent_bound is None
        assert report.violations == 0

    def test_scan_is_independent_of_worker_count(self):
        config = ScanConfig(re_min=-0.5, re_max=2.5, im_min=-1.5, im_max=1.5, nx=9, ny=7, with_numerics=True, truncation=16)
        serial = run_scan(config, AnalysisConfig(scan=ScanSettings(workers=1)))
        parallel = run_scan(config, AnalysisConfig(scan=ScanSettings(workers=8)))
        assert render_csv(serial) == render_csv(parallel)

    def test_boundary_tolerance_is_forwarded(self):
        report = run_scan(single_point(2 + 1e-6, boundary_tol=1e-5))
        assert report.rows[0].region.value == "continuous"
