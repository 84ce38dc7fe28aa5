from pathlib import Path

import pytest

from hahnspec.cli.argparser import parse_args
from hahnspec.cli.commands.check import check_command
from hahnspec.cli.commands.scan import scan_command
from hahnspec.cli.types import CheckCommandArgs, ScanCommandArgs
from hahnspec.core import ConfigError

SCAN = ["scan", "--re-min", "0", "--re-max", "2", "--im-min", "0", "--im-max", "1",
        "--nx", "3", "--ny", "1", "--out", "scan.csv"]


class TestParseArgs:
    def test_scan_defaults(self):
        args = parse_args(SCAN)
        assert isinstance(args, ScanCommandArgs)
        assert args.command_func is scan_command
        assert (args.re_min, args.re_max, args.nx, args.ny) == (0.0, 2.0, 3, 1)
        assert args.out == Path("scan.csv")
        assert args.format == "csv"
        assert args.truncation == 64
        assert args.column == 0
        assert not args.with_numerics
        assert args.boundary_tol is None

    def test_scan_options(self):
        args = parse_args(["-v", "--config", "cfg.json"] + SCAN + [
            "--format", "pgm", "--with-numerics", "--truncation", "32",
            "--column", "5", "--boundary-tol", "1e-6", "--divergence-threshold", "1e6",
        ])
        assert args.verbose
        assert args.config == Path("cfg.json")
        assert args.format == "pgm"
        assert args.with_numerics
        assert (args.truncation, args.column) == (32, 5)
        assert (args.boundary_tol, args.divergence_threshold) == (1e-6, 1e6)

    def test_check(self):
        args = parse_args(["check", "--grid-preset", "reference"])
        assert isinstance(args, CheckCommandArgs)
        assert args.command_func is check_command
        assert args.grid_preset == "reference"

    @pytest.mark.parametrize("argv", [
        [],
        ["plot"],
        ["scan", "--re-min", "0"],
        SCAN + ["--format", "png"],
        SCAN[:-4] + ["--nx", "three", "--ny", "1", "--out", "x"],
        ["check", "--grid-preset", "nowhere"],
    ])
    def test_argument_errors_raise_config_error(self, argv):
        with pytest.raises(ConfigError):
            parse_args(argv)
