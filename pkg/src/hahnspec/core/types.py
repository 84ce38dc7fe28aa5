from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from hahnspec.core.errors import NonFiniteValueError


class ComplexScalar(BaseModel):
    """Double precision complex number with finite components"""
    model_config = ConfigDict(frozen=True)

    re: float
    im: float = 0.0

    @field_validator('re', 'im', mode='after')
    @classmethod
    def validate_finite(cls, v: float) -> float:
        if not math.isfinite(v):
            raise NonFiniteValueError(f"component {v!r} is not finite")
        # normalize -0.0 so that serialized grids never print "-0"
        return v + 0.0

    @classmethod
    def from_complex(cls, value: ScalarLike) -> "ComplexScalar":
        z = as_complex(value)
        return cls(re=z.real, im=z.imag)

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    @property
    def modulus(self) -> float:
        return abs(complex(self))

    def distance_to_one(self) -> float:
        """|1 - alpha|, the quantity every region test is written in"""
        return abs(1.0 - complex(self))


ScalarLike = Union[complex, float, int, ComplexScalar]


def as_complex(value: ScalarLike) -> complex:
    """Coerce to a finite Python complex, rejecting NaN and infinity."""
    z = complex(value)
    if not cmath.isfinite(z):
        raise NonFiniteValueError(f"value {value!r} is not finite")
    return z


@dataclass(frozen=True, eq=False)
class TruncatedSequence:
    """
    Finite prefix x_1..x_N of an infinite complex sequence with zero tail.

    Storage is 0-based: ``values[i]`` holds x_{i+1}, so norm weights are i + 1.
    The underlying array is read-only.
    """
    values: np.ndarray

    def __post_init__(self):
        array = np.array(self.values, dtype=np.complex128).reshape(-1)
        if not np.all(np.isfinite(array)):
            raise NonFiniteValueError("sequence entries must be finite")
        array.setflags(write=False)
        object.__setattr__(self, "values", array)

    @classmethod
    def of(cls, entries: Iterable[ScalarLike]) -> "TruncatedSequence":
        return cls(np.array([as_complex(e) for e in entries], dtype=np.complex128))

    @classmethod
    def zeros(cls, length: int) -> "TruncatedSequence":
        return cls(np.zeros(length, dtype=np.complex128))

    def __len__(self) -> int:
        return self.values.shape[0]

    def __getitem__(self, index: int) -> complex:
        return complex(self.values[index])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSequence):
            return NotImplemented
        return np.array_equal(self.values, other.values)

    __hash__ = None

    def padded(self, length: int) -> "TruncatedSequence":
        """Extend by zeros; represents the same infinite sequence."""
        if length < len(self):
            raise ValueError(f"cannot pad length {len(self)} down to {length}")
        return TruncatedSequence(np.concatenate([self.values, np.zeros(length - len(self))]))

    def scaled(self, factor: ScalarLike) -> "TruncatedSequence":
        return TruncatedSequence(as_complex(factor) * self.values)

    def __add__(self, other: "TruncatedSequence") -> "TruncatedSequence":
        if len(self) != len(other):
            raise ValueError(f"length mismatch: {len(self)} != {len(other)}")
        return TruncatedSequence(self.values + other.values)

    def tolist(self) -> Sequence[complex]:
        return [complex(v) for v in self.values]
