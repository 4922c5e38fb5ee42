"""
Enums shared across packages
"""

from enum import Enum


class HitSource(str, Enum):
    """Where a hit came from"""

    SEARCH = "search"
    BRUTE = "brute"
    FAMILY_HALL = "family-hall"
    FAMILY_FP = "family-fp"
    SCALED = "scaled"
    TABLE = "table"


class OutputFormat(str, Enum):
    """Hit file formats"""

    TSV = "tsv"
    JSONL = "jsonl"


class FamilyKind(str, Enum):
    """Parametric families"""

    HALL = "hall"
    FERMAT_PELL = "fermat_pell"
    SCALED = "scaled"

    @property
    def source(self) -> HitSource:
        """Hit source tag for members of this family"""
        return {
            FamilyKind.HALL: HitSource.FAMILY_HALL,
            FamilyKind.FERMAT_PELL: HitSource.FAMILY_FP,
            FamilyKind.SCALED: HitSource.SCALED,
        }[self]
