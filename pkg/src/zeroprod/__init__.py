"""Exact zero-product probabilities for finite commutative rings.

P(R) is the probability that two elements drawn uniformly with
replacement from R multiply to zero.  This package computes it exactly
for Z_n and finite direct products, proves the general bounds on every
ring it can enumerate, builds zero-divisor graphs, and cross-checks the
closed forms against brute-force and gcd-sum oracles.
"""

from zeroprod.arith import gcd, rat_cmp, rat_decimal, rat_make, rat_mul, rat_str
from zeroprod.errors import (
    ContractViolationError,
    ExcludedRingError,
    InvalidInputError,
    OracleMismatchError,
    ResourceLimitError,
    RingParseError,
    ZeroDenominatorError,
    ZeroprodError,
)
from zeroprod.factor import (
    Factorization,
    factorization_json,
    factorization_str,
    factorize,
    find_nontrivial_factor,
    is_prime,
)
from zeroprod.formulas import (
    BoundsReport,
    GLOBAL_CAP,
    ann_profile_zpk,
    bounds_report,
    lower_bound,
    p_integral_domain,
    p_product,
    p_uniform_ann,
    p_zn,
    p_zn_from_factorization,
    p_zpk,
    refined_cap,
    upper_bound,
)
from zeroprod.graph import (
    GraphStats,
    ZeroDivisorGraph,
    build_graph,
    export_dot,
    export_edges_csv,
    export_vertices_csv,
    graph_stats,
)
from zeroprod.kernels import backend as kernel_backend
from zeroprod.montecarlo import MonteCarloResult, estimate_zero_pairs
from zeroprod.rings import (
    AnnProfile,
    Caps,
    DEFAULT_CAPS,
    Product,
    RingSpec,
    Zn,
    ann_count_total,
    ann_profile,
    ann_set,
    ann_size,
    ann_size_zn,
    elements,
    gcd_sum,
    max_ann_size,
    parse_ring,
    prob_brute,
    ring_order,
    zero_divisor_count,
    zero_divisor_set,
)
from zeroprod.scan import ScanRow, scan_row, scan_rows
from zeroprod.verify import VerifyReport, run_verify

__version__ = "0.1.0"

__all__ = [
    "AnnProfile",
    "BoundsReport",
    "Caps",
    "ContractViolationError",
    "DEFAULT_CAPS",
    "ExcludedRingError",
    "Factorization",
    "GLOBAL_CAP",
    "GraphStats",
    "InvalidInputError",
    "MonteCarloResult",
    "OracleMismatchError",
    "Product",
    "ResourceLimitError",
    "RingParseError",
    "RingSpec",
    "ScanRow",
    "VerifyReport",
    "ZeroDenominatorError",
    "ZeroDivisorGraph",
    "Zn",
    "ZeroprodError",
    "ann_count_total",
    "ann_profile",
    "ann_profile_zpk",
    "ann_set",
    "ann_size",
    "ann_size_zn",
    "bounds_report",
    "build_graph",
    "elements",
    "estimate_zero_pairs",
    "export_dot",
    "export_edges_csv",
    "export_vertices_csv",
    "factorization_json",
    "factorization_str",
    "factorize",
    "find_nontrivial_factor",
    "gcd",
    "gcd_sum",
    "graph_stats",
    "is_prime",
    "kernel_backend",
    "lower_bound",
    "max_ann_size",
    "p_integral_domain",
    "p_product",
    "p_uniform_ann",
    "p_zn",
    "p_zn_from_factorization",
    "p_zpk",
    "parse_ring",
    "prob_brute",
    "rat_cmp",
    "rat_decimal",
    "rat_make",
    "rat_mul",
    "rat_str",
    "refined_cap",
    "ring_order",
    "run_verify",
    "scan_row",
    "scan_rows",
    "upper_bound",
    "zero_divisor_count",
    "zero_divisor_set",
]
