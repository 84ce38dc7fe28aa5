from __future__ import annotations

from pathlib import Path
from typing import Optional, Union


class HahnSpecError(Exception):
    """Base exception for hahnspec errors"""
    pass

class EmptyInputError(HahnSpecError):
    """A sup-based functional or a truncation was asked for zero entries"""
    pass

class NonFiniteValueError(HahnSpecError, ValueError):
    """NaN or infinity passed where a finite complex value is required"""
    pass

class DegenerateOperatorError(HahnSpecError, ValueError):
    """Banded operator without a single nonzero coefficient"""
    pass

class SingularShiftError(HahnSpecError, ZeroDivisionError):
    """The shifted diagonal 1 - alpha vanishes, so no resolvent exists"""

    def __init__(self, alpha: complex, message: Optional[str] = None):
        self.alpha = alpha
        super().__init__(message or f"shift alpha={alpha} annihilates the diagonal (1 - alpha = 0)")

class ImpossibleStateError(HahnSpecError):
    """Goldberg state that cannot occur for a bounded operator on a Banach space"""

    def __init__(self, label: str):
        self.label = label
        super().__init__(f"Goldberg state {label} cannot occur in a Banach space")

class ConfigError(HahnSpecError):
    """Invalid command line arguments or scan configuration"""

    def __init__(self, message: str, field: Optional[str] = None):
        self.field = field
        super().__init__(f"{field}: {message}" if field else message)

class ReportIOError(HahnSpecError):
    """Failure writing or reading a scan report"""

    def __init__(self, path: Union[str, Path], reason: str):
        self.path = Path(path)
        super().__init__(f"cannot access {self.path}: {reason}")
