"""Knowledge reduction for decision tables.

Enumerates all reducts and the core of a decision table, samples families of
sub-tables deterministically, computes the stable (dynamic) reduct and core
constructs in plain, precision-thresholded, and generalized variants, and
verifies the containment laws relating them.
"""

from .dynamic import (
    LAMBDA_GRID,
    FamilyAnalysis,
    LambdaSlice,
    MemberAnalysis,
    StabilityReport,
    TheoremCheck,
    analyze_family,
    check_lambda,
    dynamic_core,
    dynamic_core_lambda,
    dynamic_reduct,
    dynamic_reduct_lambda,
    generalized_dynamic_core,
    generalized_dynamic_core_lambda,
    generalized_dynamic_reduct,
    generalized_dynamic_reduct_lambda,
    parse_lambda,
    stability_report,
    verify_theorems,
)
from .errors import (
    CapacityError,
    DomainError,
    EngineError,
    MissingValueError,
    ParameterError,
    ParseError,
    SchemaError,
    SelfCheckError,
)
from .oracle import brute_force_core, brute_force_reducts
from .reducts import (
    DEFAULT_MAX_ATTRS,
    DEFAULT_MAX_REDUCTS,
    absorb,
    all_reducts,
    canonical_reducts,
    core_of,
    discernibility_function,
    intersect_all,
    is_antichain,
)
from .rough import (
    DiscernibilityMatrix,
    condition_classes,
    discernibility_matrix,
    generalized_decision,
    is_reduct,
    positive_region,
)
from .table import (
    DecisionSystem,
    Family,
    SamplingPlan,
    SplitMix64,
    SubSystem,
    full_subsystem,
    make_subsystem,
    parse_decision_table,
    render_csv,
    sample_family,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "DEFAULT_MAX_ATTRS",
    "DEFAULT_MAX_REDUCTS",
    "DecisionSystem",
    "DiscernibilityMatrix",
    "DomainError",
    "EngineError",
    "Family",
    "FamilyAnalysis",
    "LAMBDA_GRID",
    "LambdaSlice",
    "MemberAnalysis",
    "MissingValueError",
    "ParameterError",
    "ParseError",
    "SamplingPlan",
    "SchemaError",
    "SelfCheckError",
    "SplitMix64",
    "StabilityReport",
    "SubSystem",
    "TheoremCheck",
    "absorb",
    "all_reducts",
    "analyze_family",
    "brute_force_core",
    "brute_force_reducts",
    "canonical_reducts",
    "check_lambda",
    "condition_classes",
    "core_of",
    "discernibility_function",
    "discernibility_matrix",
    "dynamic_core",
    "dynamic_core_lambda",
    "dynamic_reduct",
    "dynamic_reduct_lambda",
    "full_subsystem",
    "generalized_decision",
    "generalized_dynamic_core",
    "generalized_dynamic_core_lambda",
    "generalized_dynamic_reduct",
    "generalized_dynamic_reduct_lambda",
    "intersect_all",
    "is_antichain",
    "is_reduct",
    "make_subsystem",
    "parse_decision_table",
    "parse_lambda",
    "positive_region",
    "render_csv",
    "sample_family",
    "stability_report",
    "verify_theorems",
]
