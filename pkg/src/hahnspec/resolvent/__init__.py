from .entries import (dense_solve_oracle, resolvent_column, resolvent_entry,
                      resolvent_truncation, shift_pivot)
from .series import (ConvergenceKind, ConvergenceVerdict, column_sup_bound,
                     hahn_column_functional, norm_bound_partial_sums,
                     norm_bound_series)

__all__ = [
    "shift_pivot",
    "resolvent_entry",
    "resolvent_column",
    "resolvent_truncation",
    "dense_solve_oracle",
    "ConvergenceKind",
    "ConvergenceVerdict",
    "norm_bound_partial_sums",
    "norm_bound_series",
    "hahn_column_functional",
    "column_sup_bound",
]
