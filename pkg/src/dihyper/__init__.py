"""Exact enumeration toolkit for b-uniform labeled directed hypergraphs.

Counting pipelines built on graded generating-function algebra, an
exhaustive bitmask census oracle, and a harness that adjudicates the
two against each other.
"""
from .formulas import (
    COMPOSITION_LIMIT,
    CountSequence,
    LambdaResult,
    acyclic_via_compositions,
    acyclic_via_compositions_sequence,
    acyclic_via_reciprocal,
    acyclic_via_recurrence,
    all_dihypergraphs,
    all_dihypergraphs_graded,
    count_findings,
    count_sequence,
    lambda_recurrence,
    strong_via_inversion,
    total_hyperarc_count,
)
from .harness import (
    CompareReport,
    MarkedSourceResult,
    PerNComparison,
    classify_fixture,
    compare_family,
    fixture_report,
    fixture_suite,
    identity_suite,
    load_fixture,
    marked_source_check,
    marked_source_suite,
    run_suite,
)
from .oracle import (
    SEMANTICS,
    CensusTable,
    Dihypergraph,
    Hyperarc,
    UniverseTooLargeError,
    census,
    find_cycle,
    hyperarc_universe,
    induced_adjacency,
    is_acyclic,
    is_strong,
    scc_decompose,
    source_components,
)
from .polynomials import (
    ONE,
    ZERO,
    YPoly,
    binomial,
    format_poly,
    mix_exponent,
    multinomial,
    one_plus_y_pow,
)
from .series import (
    EgfSeries,
    GradedSeries,
    alternating_series,
    egf_exp,
    egf_log,
    egf_to_graded,
    graded_mul,
    graded_one,
    graded_reciprocal,
    graded_to_egf,
    hadamard,
    ones_series,
)

__version__ = "0.1.0"

__all__ = [
    "COMPOSITION_LIMIT",
    "ONE",
    "SEMANTICS",
    "ZERO",
    "CensusTable",
    "CompareReport",
    "CountSequence",
    "Dihypergraph",
    "EgfSeries",
    "GradedSeries",
    "Hyperarc",
    "LambdaResult",
    "MarkedSourceResult",
    "PerNComparison",
    "UniverseTooLargeError",
    "YPoly",
    "acyclic_via_compositions",
    "acyclic_via_compositions_sequence",
    "acyclic_via_reciprocal",
    "acyclic_via_recurrence",
    "all_dihypergraphs",
    "all_dihypergraphs_graded",
    "alternating_series",
    "binomial",
    "census",
    "classify_fixture",
    "compare_family",
    "count_findings",
    "count_sequence",
    "egf_exp",
    "egf_log",
    "egf_to_graded",
    "find_cycle",
    "fixture_report",
    "fixture_suite",
    "format_poly",
    "graded_mul",
    "graded_one",
    "graded_reciprocal",
    "graded_to_egf",
    "hadamard",
    "hyperarc_universe",
    "identity_suite",
    "induced_adjacency",
    "is_acyclic",
    "is_strong",
    "lambda_recurrence",
    "load_fixture",
    "marked_source_check",
    "marked_source_suite",
    "mix_exponent",
    "multinomial",
    "one_plus_y_pow",
    "ones_series",
    "run_suite",
    "scc_decompose",
    "source_components",
    "strong_via_inversion",
    "total_hyperarc_count",
]
