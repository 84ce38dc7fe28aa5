"""Type definitions for CLI arguments."""
from dataclasses import dataclass
from enum import IntEnum
from pathlib import Path
from typing import Callable, Literal, Optional


@dataclass
class BaseCommandArgs:
    """Base arguments for all commands."""
    verbose: bool
    config: Optional[Path]

@dataclass
class ScanCommandArgs(BaseCommandArgs):
    """Arguments for the scan command."""
    command: Literal["scan"]
    re_min: float
    re_max: float
    im_min: float
    im_max: float
    nx: int
    ny: int
    out: Path
    format: Literal["csv", "json", "pgm"] = "csv"
    truncation: int = 64
    column: int = 0
    with_numerics: bool = False
    boundary_tol: Optional[float] = None
    divergence_threshold: Optional[float] = None
    command_func: Optional[Callable] = None

@dataclass
class CheckCommandArgs(BaseCommandArgs):
    """Arguments for the check command."""
    command: Literal["check"]
    grid_preset: str = "reference"
    boundary_tol: Optional[float] = None
    command_func: Optional[Callable] = None


class ExitCode(IntEnum):
    OK = 0
    CONFIG_ERROR = 1
    IO_ERROR = 2
    VIOLATIONS = 3
