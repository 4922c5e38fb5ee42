"""
hallsearch

Search for good examples of Hall's conjecture: integers x whose distance
|x^3 - y^2| to the nearest square is smaller than sqrt(x).

Exact big-integer arithmetic throughout; floats appear only in the
distribution statistics.
"""

__version__ = "1.0.0"
__license__ = "MIT"

from hallsearch.arith import HallPoint, hall_k
from hallsearch.config import SearchConfig
from hallsearch.models import Hit, HitSource
from hallsearch.pipeline import Candidate, SearchCell, build_candidates, evaluate_candidate
from hallsearch.search import SearchRunner, run

__all__ = [
    "HallPoint",
    "hall_k",
    "SearchConfig",
    "Hit",
    "HitSource",
    "Candidate",
    "SearchCell",
    "build_candidates",
    "evaluate_candidate",
    "SearchRunner",
    "run",
]
