"""Hölder-type bounds on finite discrete measure spaces.

The max-min bound B_p, obtained by applying Hölder's inequality to
(max(f, g), min(f, g)), improves Cauchy-Schwarz at p = 2 but not Hölder for
any other exponent. This package computes the bounds, checks the p = 2
identity, evaluates the explicit two-step counterexample family, and runs
seeded random searches.
"""

from .bounds import (
    BoundReport,
    CsIdentityReport,
    bound_report,
    cs_identity_report,
    holder_rhs,
    maxmin_bound,
    symmetrized_bound,
)
from .errors import (
    DimensionError,
    DomainError,
    ExceptionalExponentError,
    HolderError,
    InvariantError,
    SignConditionError,
    UsageError,
)
from .family import (
    FamilyParams,
    GapPoint,
    ScanResult,
    derivative_at_zero,
    family_functions,
    fd_derivative_at_zero,
    find_violation_t,
    gap_pair,
    validate_params,
)
from .measure import (
    IDENTITY_TOL,
    ORDER_TOL,
    DiscreteMeasure,
    ExponentPair,
    SampledFunction,
    conjugate,
    integrate,
    lr_mean,
    pointwise,
)
from .search import SearchConfig, SearchResult, random_search
from .transforms import (
    Compose,
    MaxMin,
    Scale,
    Swap,
    apply,
    parse_transform,
    transformed_holder_bound,
    verify_product_preserving,
)

__version__ = "0.1.0"
