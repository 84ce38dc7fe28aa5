from .norms import (FunctionalValue, SequenceFunctionals, abs_cesaro_functional,
                    exceeds_threshold, forward_differences, hahn_norm,
                    int_c0_gauge, l1_norm, rao_norm, rho_inf_functional)

__all__ = [
    "hahn_norm",
    "rao_norm",
    "l1_norm",
    "int_c0_gauge",
    "rho_inf_functional",
    "abs_cesaro_functional",
    "forward_differences",
    "exceeds_threshold",
    "FunctionalValue",
    "SequenceFunctionals",
]
