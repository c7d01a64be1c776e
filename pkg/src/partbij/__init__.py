"""Partition bijections, truncated multivariate q-series, and mechanical
verification of the identities they satisfy.

The library has five layers: plain and colored partitions with their
statistics, the named bijections between partition families, exact
truncated series arithmetic over integer coefficient boxes, a catalog of
verifiable identities, and a command-line front end.
"""

from .bijections import (
    CollisionGroup,
    ColorConjugatePair,
    HookMapImage,
    InvalidPair,
    NotDistinct,
    NotInImage,
    NotOddParts,
    bessenrodt,
    bessenrodt_inverse,
    collision_search,
    color_conjugate,
    color_conjugate_inverse,
    generalized_hook_map,
    modular_fill,
    modular_fill_inverse,
    mork,
    mork_inverse,
)
from .colored import ColoredPartition, ColoredPartitionError, enumerate_colored
from .partitions import (
    CellOutOfDiagram,
    FrobeniusCoords,
    InvalidDiagram,
    InvalidFrobenius,
    ModularDiagram,
    NegativePart,
    NotSorted,
    Partition,
    PartitionError,
    color_profile,
    conjugate,
    count_in_box,
    count_partitions,
    durfee_size,
    enumerate_partitions,
    from_frobenius,
    from_modular,
    hook_length,
    make_partition,
    schmidt_weight,
    to_frobenius,
    to_modular,
)
from .series import (
    INFINITY,
    BoxMismatch,
    BoxTooSmall,
    CoefficientOverflow,
    DivergentInfiniteProduct,
    NonUnitConstantTerm,
    OutOfBox,
    SeriesError,
    TruncatedSeries,
    add,
    coefficient,
    equal_in_box,
    first_mismatch,
    invert,
    mul,
    pochhammer,
    q_binomial,
    substitute,
)
from .verify import (
    IDENTITY_IDS,
    THEOREM_IDS,
    DegenerateParams,
    SuiteReport,
    UnboundedBox,
    VerificationReport,
    VerifyError,
    default_box,
    f_recurrence,
    lhs_series,
    rhs_series,
    run_suite,
    run_verifier,
    table_bessenrodt,
    verify_color_conjugate,
    verify_euler_refinement,
    verify_functional_equation,
    verify_furtherwork,
    verify_identity,
    verify_li_yee,
    verify_opposite_schmidt,
    verify_recurrence,
    verify_schmidt,
    verify_schmidt_refinement,
    verify_table,
)

__version__ = "0.1.0"

__all__ = [
    "BoxMismatch",
    "BoxTooSmall",
    "CellOutOfDiagram",
    "CoefficientOverflow",
    "CollisionGroup",
    "ColorConjugatePair",
    "ColoredPartition",
    "ColoredPartitionError",
    "DegenerateParams",
    "DivergentInfiniteProduct",
    "FrobeniusCoords",
    "HookMapImage",
    "IDENTITY_IDS",
    "INFINITY",
    "InvalidDiagram",
    "InvalidFrobenius",
    "InvalidPair",
    "ModularDiagram",
    "NegativePart",
    "NonUnitConstantTerm",
    "NotDistinct",
    "NotInImage",
    "NotOddParts",
    "NotSorted",
    "OutOfBox",
    "Partition",
    "PartitionError",
    "SeriesError",
    "SuiteReport",
    "THEOREM_IDS",
    "TruncatedSeries",
    "UnboundedBox",
    "VerificationReport",
    "VerifyError",
    "add",
    "bessenrodt",
    "bessenrodt_inverse",
    "coefficient",
    "collision_search",
    "color_conjugate",
    "color_conjugate_inverse",
    "color_profile",
    "conjugate",
    "count_in_box",
    "count_partitions",
    "default_box",
    "durfee_size",
    "enumerate_colored",
    "enumerate_partitions",
    "equal_in_box",
    "f_recurrence",
    "first_mismatch",
    "from_frobenius",
    "from_modular",
    "generalized_hook_map",
    "hook_length",
    "invert",
    "lhs_series",
    "make_partition",
    "modular_fill",
    "modular_fill_inverse",
    "mork",
    "mork_inverse",
    "mul",
    "pochhammer",
    "q_binomial",
    "rhs_series",
    "run_suite",
    "run_verifier",
    "schmidt_weight",
    "substitute",
    "table_bessenrodt",
    "to_frobenius",
    "to_modular",
    "verify_color_conjugate",
    "verify_euler_refinement",
    "verify_functional_equation",
    "verify_furtherwork",
    "verify_identity",
    "verify_li_yee",
    "verify_opposite_schmidt",
    "verify_recurrence",
    "verify_schmidt",
    "verify_schmidt_refinement",
    "verify_table",
]
