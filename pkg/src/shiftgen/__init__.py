"""Exact-arithmetic toolkit for shifted-generic cohomology certificates.

Root-system tables, weight-digit combinatorics, affine Weyl linkage, the
named bound constants, graded Kostant partition counts, and certificate
engines deciding when finite-group cohomology identifies with rational
cohomology after a digit shift.
"""

from .rootsys import ResourceError, RootSystemData, build_root_system, pairing
from .weights import (
    DigitExpansion,
    digit_difference,
    digit_expand,
    dominance_leq,
    is_b_small,
    is_restricted,
    lattice_order,
    longest_common_zero_run,
    q_shift,
)
from .weyl import (
    LinkageResult,
    WeylElement,
    alcove_tests,
    conjugate_to_zero_ext,
    dot_action,
    enumerate_weyl,
    find_nu_small_conjugate,
    linked_Wp,
)
from .bounds import (
    BoundContext,
    cpsk_constants,
    d_prime,
    delta,
    digit_bound_d,
    filtration_cutoff_b,
    large_prime_thresholds,
    r0_threshold,
    smallness_bounds,
)
from .kostant import appendix_dimension, kostant_graded, weyl_dimension
from .genericity import (
    FiltrationSection,
    ShiftCertificate,
    certify_shifted_generic,
    classify_weight,
    cpsk_check,
    digit_vanishing_check,
    enumerate_filtration_sections,
    large_prime_collapse,
    qprime_stability,
    verify_certificate,
)

__all__ = [
    "ResourceError",
    "RootSystemData",
    "build_root_system",
    "pairing",
    "DigitExpansion",
    "digit_expand",
    "digit_difference",
    "q_shift",
    "longest_common_zero_run",
    "is_b_small",
    "is_restricted",
    "lattice_order",
    "dominance_leq",
    "WeylElement",
    "LinkageResult",
    "enumerate_weyl",
    "dot_action",
    "linked_Wp",
    "conjugate_to_zero_ext",
    "find_nu_small_conjugate",
    "alcove_tests",
    "BoundContext",
    "smallness_bounds",
    "filtration_cutoff_b",
    "delta",
    "digit_bound_d",
    "d_prime",
    "cpsk_constants",
    "r0_threshold",
    "large_prime_thresholds",
    "kostant_graded",
    "appendix_dimension",
    "weyl_dimension",
    "ShiftCertificate",
    "FiltrationSection",
    "digit_vanishing_check",
    "cpsk_check",
    "certify_shifted_generic",
    "verify_certificate",
    "large_prime_collapse",
    "qprime_stability",
    "classify_weight",
    "enumerate_filtration_sections",
]

__version__ = "0.1.0"
