"""Exact enumeration, generating functions, and asymptotics for galled
phylogenetic networks: general galled trees, time-consistent galled trees,
and simplex time-consistent galled trees, unlabeled and leaf-labeled.
"""

from .counts import (
    ALL_SPECS,
    CountTable,
    GENERAL_LABELED,
    GENERAL_UNLABELED,
    Labeling,
    NetworkClass,
    SIMPLEX_LABELED,
    SIMPLEX_UNLABELED,
    TC_LABELED,
    TC_UNLABELED,
    TreeClassSpec,
    build_table,
    count,
    labeled_tree_count,
    simplex_total_direct,
    total,
    wedderburn,
)
from .series import BivariateSeries, SeriesDivergenceError, TruncatedSeries, fixed_point_solve
from .genfunc import (
    arbitrary_galls_series,
    base_tree_series,
    closed_small_g,
    fixed_g_series,
    solve_bivariate,
)
from .asym import (
    AsymptoticEstimate,
    CharFamily,
    CharSysSolution,
    DerivativeMode,
    SingularConstants,
    beta,
    estimate_log,
    ratio_exact_to_estimate,
    simplex_to_general_ratio,
    solve_charsys,
    solve_rho_gamma,
)
from .oracle import (
    GallTop,
    Internal,
    LEAF,
    canonical_key,
    count_by_galls,
    dump_text,
    generate_all,
    labeled_count,
    parse_text,
    validate,
)
from .bijections import (
    check_labeled_corollaries,
    check_unlabeled_identities,
    plane_to_saturated_general,
    tree_to_saturated_simplex,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_SPECS",
    "AsymptoticEstimate",
    "BivariateSeries",
    "CharFamily",
    "CharSysSolution",
    "CountTable",
    "DerivativeMode",
    "GENERAL_LABELED",
    "GENERAL_UNLABELED",
    "GallTop",
    "Internal",
    "LEAF",
    "Labeling",
    "NetworkClass",
    "SIMPLEX_LABELED",
    "SIMPLEX_UNLABELED",
    "SeriesDivergenceError",
    "SingularConstants",
    "TC_LABELED",
    "TC_UNLABELED",
    "TreeClassSpec",
    "TruncatedSeries",
    "arbitrary_galls_series",
    "base_tree_series",
    "beta",
    "build_table",
    "canonical_key",
    "check_labeled_corollaries",
    "check_unlabeled_identities",
    "closed_small_g",
    "count",
    "count_by_galls",
    "dump_text",
    "estimate_log",
    "fixed_g_series",
    "fixed_point_solve",
    "generate_all",
    "labeled_count",
    "labeled_tree_count",
    "parse_text",
    "plane_to_saturated_general",
    "ratio_exact_to_estimate",
    "simplex_to_general_ratio",
    "simplex_total_direct",
    "solve_bivariate",
    "solve_charsys",
    "solve_rho_gamma",
    "total",
    "tree_to_saturated_simplex",
    "validate",
    "wedderburn",
]
