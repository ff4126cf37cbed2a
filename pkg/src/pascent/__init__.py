"""Exact enumeration and generating-function toolkit for p-ascent sequences."""

from .core import (
    PAscentSequence,
    StatProfile,
    asc,
    count_by_length,
    enumerate_sequences,
    is_p_ascent,
    oracle_table,
    stats,
)
from .patterns import (
    NoClosedFormError,
    Pattern,
    avoider_counts,
    bijection_012_to_10,
    bijection_10_to_012,
    closed_count,
    count_avoiders,
    count_vincular_212_ternary,
    embed,
    gf_avoiders,
    iter_avoiders,
    occurs,
    project,
    red,
)
from .series import MultiPoly, TSeries, scalar_coefficients
from .verify import (
    BudgetExceededError,
    CheckReport,
    check_identity,
    check_oracle_vs,
    check_pattern,
    run_all,
)

__version__ = "0.1.0"

__all__ = [
    "PAscentSequence",
    "StatProfile",
    "asc",
    "is_p_ascent",
    "stats",
    "enumerate_sequences",
    "count_by_length",
    "oracle_table",
    "MultiPoly",
    "TSeries",
    "scalar_coefficients",
    "Pattern",
    "NoClosedFormError",
    "red",
    "occurs",
    "avoider_counts",
    "count_avoiders",
    "iter_avoiders",
    "closed_count",
    "gf_avoiders",
    "embed",
    "project",
    "bijection_10_to_012",
    "bijection_012_to_10",
    "count_vincular_212_ternary",
    "CheckReport",
    "BudgetExceededError",
    "check_oracle_vs",
    "check_identity",
    "check_pattern",
    "run_all",
    "__version__",
]
