"""Generalized divisor sums, alpha-number classification, and bounded searches.

The library computes sigma_x(n) for integer, real, complex, and quaternion
exponents x, classifies integers into the strong/weak/very-weak bands under
the exact, floored, and ceiled definitions, enumerates and searches for hits
below a bound, and audits the published reference tables.
"""

__version__ = "0.1.0"

from .classify import (
    Classification,
    Order,
    Verdict,
    alpha_ratio,
    classify_exact,
    classify_rounded,
    partial_alpha,
    ratio_bound_check,
)
from .errors import AlphanumError, DegenerateDenominatorError, ResourceCapError
from .exact import (
    Factorization,
    ReducedRatio,
    SieveTable,
    build_sieve,
    divisor_stats,
    divisors_list,
    factorize,
    is_ore_harmonic,
    reduce_ratio,
    sigma_k_exact,
)
from .hyper import (
    Precision,
    Quaternion,
    quat_mul,
    real_pow_quat,
    rounded_modulus,
    sigma_general,
)
from .search import (
    AlphaRecord,
    AlphaSeed,
    AuditRow,
    VirtualAlpha,
    audit_tables,
    build_seeds,
    chi_alpha,
    count_alpha,
    enumerate_alpha,
    seed_search_odd,
    verify_theorem,
)

__all__ = [
    "AlphaRecord",
    "AlphaSeed",
    "AlphanumError",
    "AuditRow",
    "Classification",
    "DegenerateDenominatorError",
    "Factorization",
    "Order",
    "Precision",
    "Quaternion",
    "ReducedRatio",
    "ResourceCapError",
    "SieveTable",
    "Verdict",
    "VirtualAlpha",
    "__version__",
    "alpha_ratio",
    "audit_tables",
    "build_seeds",
    "build_sieve",
    "chi_alpha",
    "classify_exact",
    "classify_rounded",
    "count_alpha",
    "divisor_stats",
    "divisors_list",
    "enumerate_alpha",
    "factorize",
    "is_ore_harmonic",
    "partial_alpha",
    "quat_mul",
    "ratio_bound_check",
    "real_pow_quat",
    "reduce_ratio",
    "rounded_modulus",
    "seed_search_odd",
    "sigma_general",
    "sigma_k_exact",
    "verify_theorem",
]
