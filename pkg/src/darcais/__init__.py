"""Exact recursive polynomials attached to normalized arithmetic functions.

P_0 = 1 and P_n = (x / h(n)) * sum_{k=1}^n g(k) P_{n-k} for a pair of
normalized arithmetic functions g, h (h non-vanishing).  The package
computes these polynomials and their coefficient triangle exactly, derives
the coefficients independently from partition-weight formulas, checks
everything against generating-function and hook-length oracles, and runs
log-concavity and non-vanishing scans.
"""

from .arith import (
    ArithmeticFunction,
    CumulativeProduct,
    from_descriptor,
    from_table,
    identity,
    one,
    sigma,
    tilde,
)
from .exact import Poly, Series, X, format_rational, rational
from .partitions import (
    compositions_of,
    composition_count,
    hook_multiset,
    multinomial,
    multiplicities,
    orbit_of,
    orbit_size,
    partitions_of,
    stirling_first_unsigned,
)
from .recursion import (
    CoefficientTable,
    coefficient_table,
    coefficient_top_band,
    polynomial,
    polynomial_sequence,
    scaled_coeff,
    value_sequence,
)
from .series import (
    closed_family_check,
    euler_product_power,
    generating_series_h_id,
    generating_series_h_one,
    hook_length_polynomial,
    inverse_eisenstein,
)
from .shapes import (
    counterexample_search,
    hook_poly_log_concavity_scan,
    hook_poly_top_inequality_scan,
    is_log_concave,
    is_ultra_log_concave,
    is_unimodal,
    lehmer_scan,
    top_margin,
    top_margin_lower_bound,
    transfer_check,
)
from .weights import (
    coefficient_composition_sum,
    coefficient_from_weights,
    coefficient_h_id,
    coefficient_h_one,
    conversion_holds,
    conversion_scan,
    g_weight,
    h_weight,
    h_weight_id,
    h_weight_one,
    orbit_weight_sum,
    orbit_weight_sum_direct,
)

__version__ = "0.1.0"

__all__ = [
    "ArithmeticFunction",
    "CoefficientTable",
    "CumulativeProduct",
    "Poly",
    "Series",
    "X",
    "closed_family_check",
    "coefficient_composition_sum",
    "coefficient_from_weights",
    "coefficient_h_id",
    "coefficient_h_one",
    "coefficient_table",
    "coefficient_top_band",
    "composition_count",
    "compositions_of",
    "conversion_holds",
    "conversion_scan",
    "counterexample_search",
    "euler_product_power",
    "format_rational",
    "from_descriptor",
    "from_table",
    "g_weight",
    "generating_series_h_id",
    "generating_series_h_one",
    "h_weight",
    "h_weight_id",
    "h_weight_one",
    "hook_length_polynomial",
    "hook_multiset",
    "hook_poly_log_concavity_scan",
    "hook_poly_top_inequality_scan",
    "identity",
    "inverse_eisenstein",
    "is_log_concave",
    "is_ultra_log_concave",
    "is_unimodal",
    "lehmer_scan",
    "multinomial",
    "multiplicities",
    "one",
    "orbit_of",
    "orbit_size",
    "orbit_weight_sum",
    "orbit_weight_sum_direct",
    "partitions_of",
    "polynomial",
    "polynomial_sequence",
    "rational",
    "scaled_coeff",
    "sigma",
    "stirling_first_unsigned",
    "tilde",
    "top_margin",
    "top_margin_lower_bound",
    "transfer_check",
    "value_sequence",
]
