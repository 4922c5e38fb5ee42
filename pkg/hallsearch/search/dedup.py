"""
Dedup Store - one output row per x

The same x can be reached from several (b, C2) cells; the first one written
wins and later arrivals are only counted.
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Set

from ..models import Hit


def dedup_key(hit: Hit) -> int:
    """Hits are identified by x alone"""
    return hit.x


@dataclass
class DedupStats:
    """Dedup statistics"""

    unique: int = 0
    duplicates: int = 0

    @property
    def duplicate_rate(self) -> float:
        total = self.unique + self.duplicates
        return self.duplicates / total if total > 0 else 0.0

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "unique": self.unique,
            "duplicates": self.duplicates,
            "duplicate_rate": self.duplicate_rate,
        }


class DedupStore:
    """
    In-memory set of emitted keys

    Seeded from the checkpoint and the existing output file on resume.
    """

    def __init__(self, seen: Iterable[int] = ()):
        self._seen: Set[int] = set(seen)
        self._stats = DedupStats(unique=len(self._seen))

    def add(self, hit: Hit) -> bool:
        """
        Record a hit

        Returns:
            True if the key is new and the hit should be written
        """
        key = dedup_key(hit)
        if key in self._seen:
            self._stats.duplicates += 1
            return False
        self._seen.add(key)
        self._stats.unique += 1
        return True

    def merge(self, keys: Iterable[int]) -> None:
        """Add keys known to be written already"""
        self._seen.update(keys)
        self._stats.unique = len(self._seen)

    def __contains__(self, key: object) -> bool:
        return key in self._seen

    def __len__(self) -> int:
        return len(self._seen)

    def keys(self) -> List[int]:
        return sorted(self._seen)

    @property
    def stats(self) -> DedupStats:
        return self._stats
