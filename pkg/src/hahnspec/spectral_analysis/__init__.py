from .classifier import classify_adjoint_point, classify_point, on_boundary
from .consistency import CHECKS, check_classification, consistency_suite
from .diagnostics import compute_diagnostics, section_sizes
from .goldberg import GOLDBERG_TABLE, goldberg_membership, realizable_states
from .types import (AdjointClassification, AdjointEigenResult, AdjointVerdict,
                    ConsistencyReport, ConsistencyViolation, Diagnostics,
                    EigenRecursionResult, EigenVerdict, GoldbergState,
                    GrowthClass, GrowthReport, InverseCondition, Membership,
                    PointClassification, RangeCondition, SpectralRegion)
from .verifiers import (adjoint_eigen_test, eigen_recursion_solve,
                        finite_section_growth)

__all__ = [
    "classify_point",
    "classify_adjoint_point",
    "on_boundary",
    "goldberg_membership",
    "realizable_states",
    "GOLDBERG_TABLE",
    "eigen_recursion_solve",
    "adjoint_eigen_test",
    "finite_section_growth",
    "consistency_suite",
    "check_classification",
    "CHECKS",
    "compute_diagnostics",
    "section_sizes",
    "AdjointClassification",
    "AdjointEigenResult",
    "AdjointVerdict",
    "ConsistencyReport",
    "ConsistencyViolation",
    "Diagnostics",
    "EigenRecursionResult",
    "EigenVerdict",
    "GoldbergState",
    "GrowthClass",
    "GrowthReport",
    "InverseCondition",
    "Membership",
    "PointClassification",
    "RangeCondition",
    "SpectralRegion",
]
