"""Search and verification workflows."""

from .search_workflow import (
    family_search,
    family_specs,
    min_rho_search,
    verify_family_consistency,
    verify_remark,
    verify_theorem_pattern,
)
from .verify_workflow import SUITES, run_suite

__all__ = [
    "family_search",
    "family_specs",
    "min_rho_search",
    "verify_family_consistency",
    "verify_remark",
    "verify_theorem_pattern",
    "SUITES",
    "run_suite",
]
