"""Spectral scales, majorization and unitary-orbit convex hulls at finite-spectrum scale."""
from ._numeric import DomainError, PreconditionError, ValidationError
from .distances import (
    hull_distance,
    hull_to_hull_distance,
    nearest_majorized_profile,
    orbit_distance,
    spectral_hull_distance,
)
from .majorize import check_positive_map_contract, convex_test_check, dominates_pointwise, majorizes, submajorizes
from .purely_infinite import hull_member_normal, hull_member_selfadjoint
from .spectral import (
    SpectralForm,
    SpectrumSet,
    TracialHermitian,
    align,
    dimension_function,
    discretize,
    eigenvalue_function,
    singular_value_function,
)
from .stepfn import StepFunction, block_average, partial_integral, rearrange, sup_distance
from .synthesis import (
    Contraction,
    MixingPlan,
    RecursionTrace,
    TTransformStep,
    averaging_recursion,
    compression_for_dominance,
    pinch,
    realize_mixing_plan,
    reduce_to_target,
    replay,
    submajorization_contraction,
    submajorization_plan,
    two_sided_compression,
    two_sided_orbit_member,
)

__version__ = "0.1.0"
