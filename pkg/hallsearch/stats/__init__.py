"""
Distribution Analysis - how |k|/sqrt(x) is spread over (0, n]
"""

from .distribution import (
    KSResult,
    StatsReport,
    build_report,
    count_model,
    histogram,
    ks_uniform,
    mean_ratio,
    ratio_samples_from_hits,
)

__all__ = [
    "KSResult",
    "StatsReport",
    "build_report",
    "count_model",
    "histogram",
    "ks_uniform",
    "mean_ratio",
    "ratio_samples_from_hits",
]
