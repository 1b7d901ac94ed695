"""Exact dimension chases for degenerations of I-surfaces."""

from ._hodgechase import (
    B0Contact,
    BigradedDims,
    Catalog,
    ChainReport,
    ChainStep,
    ChaseError,
    CoverGenus,
    CoverTopology,
    CurveData,
    Evaluation,
    HodgePoset,
    HodgeType,
    IsolatedBranchPoint,
    NonReducedBranchPoint,
    RealizationReport,
    Scenario,
    SingularityClass,
    VerifySummary,
    build_nonnormal_cover,
    build_poset,
    builtin_catalog,
    chains_dot,
    chi_condition,
    classify,
    curve_h0,
    curve_h1,
    evaluate,
    evaluate_unchecked,
    format_diamond,
    hodge_type_of,
    intersection_count,
    load_catalog,
    log_canonical_square,
    o1_square,
    polarized_leq,
    poset_dot,
    realization_report,
    riemann_hurwitz_double,
    run_report,
    table2,
    valid_hodge_type,
    verify_all,
    wps_curve_genus,
)

__all__ = [
    "B0Contact",
    "BigradedDims",
    "Catalog",
    "ChainReport",
    "ChainStep",
    "ChaseError",
    "CoverGenus",
    "CoverTopology",
    "CurveData",
    "Evaluation",
    "HodgePoset",
    "HodgeType",
    "IsolatedBranchPoint",
    "NonReducedBranchPoint",
    "RealizationReport",
    "Scenario",
    "SingularityClass",
    "VerifySummary",
    "build_nonnormal_cover",
    "build_poset",
    "builtin_catalog",
    "chains_dot",
    "chi_condition",
    "classify",
    "curve_h0",
    "curve_h1",
    "evaluate",
    "evaluate_unchecked",
    "format_diamond",
    "hodge_type_of",
    "intersection_count",
    "load_catalog",
    "log_canonical_square",
    "o1_square",
    "polarized_leq",
    "poset_dot",
    "realization_report",
    "riemann_hurwitz_double",
    "run_report",
    "table2",
    "valid_hodge_type",
    "verify_all",
    "wps_curve_genus",
]
