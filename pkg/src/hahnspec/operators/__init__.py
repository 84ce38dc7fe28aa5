from .banded import (BandedOperator, apply, backward_difference,
                     forward_difference, shifted, transpose, truncate_dense)
from .bounds import BoundednessEstimate, boundedness_ratio

__all__ = [
    "BandedOperator",
    "forward_difference",
    "backward_difference",
    "shifted",
    "transpose",
    "apply",
    "truncate_dense",
    "BoundednessEstimate",
    "boundedness_ratio",
]
