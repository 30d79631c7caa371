"""Cyclic regularities of strings: cyclic periods, runs and covers."""

from cyclorex.text import (
    ParameterError,
    as_text,
    canonical_rotation,
    is_rotation,
    reverse,
    rotate,
)
from cyclorex.lce import LceIndex, build, build_reverse, lce, lce_reverse
from cyclorex.period import (
    CyclicDecomposition,
    all_cyclic_periods,
    cyclic_period_array,
    is_k_cyclic_periodic,
    k_cyclic_decompose,
    smallest_cyclic_period,
)
from cyclorex.runs import (
    Run,
    is_cyclic_periodic_substring,
    maximal_cyclic_runs,
    maximal_k_cyclic_runs,
)
from cyclorex.cover import (
    CoverReport,
    all_cyclic_covers,
    is_k_cyclic_coverable,
    k_cyclic_cover_report,
    smallest_cyclic_cover,
)

__all__ = [
    "ParameterError",
    "as_text",
    "canonical_rotation",
    "is_rotation",
    "reverse",
    "rotate",
    "LceIndex",
    "build",
    "build_reverse",
    "lce",
    "lce_reverse",
    "CyclicDecomposition",
    "all_cyclic_periods",
    "cyclic_period_array",
    "is_k_cyclic_periodic",
    "k_cyclic_decompose",
    "smallest_cyclic_period",
    "Run",
    "is_cyclic_periodic_substring",
    "maximal_cyclic_runs",
    "maximal_k_cyclic_runs",
    "CoverReport",
    "all_cyclic_covers",
    "is_k_cyclic_coverable",
    "k_cyclic_cover_report",
    "smallest_cyclic_cover",
]

__version__ = "0.1.0"
