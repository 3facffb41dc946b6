"""Exact comparison of the toric Proj and the multihomogeneous Proj of a fan's support-function algebra."""

from .coxring import (
    Chart,
    CoxModel,
    Monomial,
    NotRelevant,
    chart,
    chart_of_cone,
    cox_model,
    is_relevant,
    twist_line_bundle_locus,
)
from .fan import (
    Fan,
    FanValidationError,
    builtin_fan,
    fan_report,
    hirzebruch,
    independent_subsets,
    is_complete,
    is_simplicially_complete,
    projective_space,
    random_smooth_surface,
    star_subdivision,
    validate_fan,
    weighted_projective_space,
)
from .projcmp import (
    ComparisonReport,
    WitnessIdeal,
    classify_surface,
    compare,
    compare_fan,
    projmh_atlas,
    tproj_atlas,
    verify_witness,
    witness_ideal,
)
from .suppfun import (
    AssumptionViolation,
    NoCartierFunction,
    enough_cartier,
    monoid_irreducibles_box,
    picard,
    ray_function,
    ray_functions,
    support_function_lattice,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
