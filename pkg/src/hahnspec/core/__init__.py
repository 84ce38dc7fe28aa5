from .errors import (ConfigError, DegenerateOperatorError, EmptyInputError,
                     HahnSpecError, ImpossibleStateError, NonFiniteValueError,
                     ReportIOError, SingularShiftError)
from .types import ComplexScalar, ScalarLike, TruncatedSequence, as_complex

__all__ = [
    "ComplexScalar",
    "ScalarLike",
    "TruncatedSequence",
    "as_complex",
    "HahnSpecError",
    "EmptyInputError",
    "NonFiniteValueError",
    "DegenerateOperatorError",
    "SingularShiftError",
    "ImpossibleStateError",
    "ConfigError",
    "ReportIOError",
]
