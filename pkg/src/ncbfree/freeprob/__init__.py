"""Non-commutative probability of types A and B."""

from .cumulants import (
    cumulant_a,
    cumulant_a_prime,
    cumulant_b,
    cumulant_partition,
    cumulant_unified,
    cumulants_from_moments_a,
    expectation_b,
    linking_product,
    moment_series_a,
    moment_series_b,
    moments_from_cumulants_a,
    r_transform_a,
    r_transform_b,
)
from .freeness import (
    FreePairs,
    FreenessReport,
    free_independence_moment_check,
    make_free_pair,
    make_free_pairs,
    mixed_cumulant_check,
    r_sum_product,
)
from .spaces import FormalSpaceB, LinkingElement, MatrixSpaceA, Poly, is_vector_letter, load_space

__all__ = [
    "FormalSpaceB",
    "FreePairs",
    "FreenessReport",
    "LinkingElement",
    "MatrixSpaceA",
    "Poly",
    "cumulant_a",
    "cumulant_a_prime",
    "cumulant_b",
    "cumulant_partition",
    "cumulant_unified",
    "cumulants_from_moments_a",
    "expectation_b",
    "free_independence_moment_check",
    "is_vector_letter",
    "linking_product",
    "load_space",
    "make_free_pair",
    "make_free_pairs",
    "mixed_cumulant_check",
    "moment_series_a",
    "moment_series_b",
    "moments_from_cumulants_a",
    "r_sum_product",
    "r_transform_a",
    "r_transform_b",
]
