"""
Data models shared by the search, oracle, families and CLI layers
"""

from .enums import FamilyKind, HitSource, OutputFormat
from .hits import Hit, RatioSample

__all__ = [
    "FamilyKind",
    "HitSource",
    "OutputFormat",
    "Hit",
    "RatioSample",
]
