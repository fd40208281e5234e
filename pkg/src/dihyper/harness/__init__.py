"""Cross-validation: formula-vs-oracle comparison, check suites, fixtures, IO."""
from .checks import (
    SUITE_NAMES,
    CheckResult,
    fixture_suite,
    format_results,
    identity_suite,
    marked_source_suite,
    run_suite,
)
from .compare import (
    CompareReport,
    MarkedSourceResult,
    PerNComparison,
    compare_family,
    marked_source_check,
)
from .fixtures import (
    FIXTURE_NAMES,
    Fixture,
    FixtureReport,
    classify_fixture,
    fixture_report,
    format_fixture_report,
    load_fixture,
)
from .serialize import (
    CensusSummary,
    census_summary,
    emit_census_csv,
    emit_census_json,
    emit_compare_json,
    emit_counts_csv,
    emit_counts_json,
    emit_eval_csv,
    emit_eval_json,
    pairs_to_poly,
    parse_census_json,
    parse_compare_json,
    parse_counts_json,
    poly_pairs,
)

__all__ = [
    "FIXTURE_NAMES",
    "SUITE_NAMES",
    "CensusSummary",
    "CheckResult",
    "CompareReport",
    "Fixture",
    "FixtureReport",
    "MarkedSourceResult",
    "PerNComparison",
    "census_summary",
    "classify_fixture",
    "compare_family",
    "emit_census_csv",
    "emit_census_json",
    "emit_compare_json",
    "emit_counts_csv",
    "emit_counts_json",
    "emit_eval_csv",
    "emit_eval_json",
    "fixture_report",
    "fixture_suite",
    "format_fixture_report",
    "format_results",
    "identity_suite",
    "load_fixture",
    "marked_source_check",
    "marked_source_suite",
    "pairs_to_poly",
    "parse_census_json",
    "parse_compare_json",
    "parse_counts_json",
    "poly_pairs",
    "run_suite",
]
