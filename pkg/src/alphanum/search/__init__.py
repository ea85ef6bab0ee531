"""Bounded enumeration, pruned odd search, theorem checks, and table audits."""

from .audit import AuditRow, audit_tables, has_mismatch
from .enumeration import AlphaRecord, count_alpha, enumerate_alpha, enumerate_range
from .seeds import (
    AlphaSeed,
    VirtualAlpha,
    build_seeds,
    chi_alpha,
    generator_table,
    seed_search_odd,
)
from .theorems import THEOREM_IDS, TheoremReport, verify_theorem

__all__ = [
    "AlphaRecord",
    "AlphaSeed",
    "AuditRow",
    "THEOREM_IDS",
    "TheoremReport",
    "VirtualAlpha",
    "audit_tables",
    "build_seeds",
    "chi_alpha",
    "count_alpha",
    "enumerate_alpha",
    "enumerate_range",
    "generator_table",
    "has_mismatch",
    "seed_search_odd",
    "verify_theorem",
]
