"""
Worker pool helpers shared by the range scans (oracle, Fermat-Pell family)

A scan over [lo, hi] is split into contiguous partitions, each handled by one
process; results come back in partition order so merging by x is a
concatenation.
"""

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence, Tuple, TypeVar

from .logging_config import get_logger

logger = get_logger(__name__)

T = TypeVar("T")

MAX_AUTO_WORKERS = 8


def default_workers() -> int:
    """Worker count from the CPU count, capped"""
    return max(1, min(os.cpu_count() or 1, MAX_AUTO_WORKERS))


def partition_range(lo: int, hi: int, parts: int) -> List[Tuple[int, int]]:
    """
    Split [lo, hi] into at most `parts` contiguous inclusive ranges

    Sizes differ by at most one and the ranges cover [lo, hi] exactly.
    """
    if hi < lo:
        return []
    total = hi - lo + 1
    parts = max(1, min(parts, total))
    base, extra = divmod(total, parts)
    ranges = []
    start = lo
    for index in range(parts):
        size = base + (1 if index < extra else 0)
        ranges.append((start, start + size - 1))
        start += size
    return ranges


def run_partitioned(
    fn: Callable[..., T],
    ranges: Sequence[Tuple[int, int]],
    workers: Optional[int] = None,
    *args,
) -> List[T]:
    """
    Apply fn(lo, hi, *args) to every range

    A single worker runs inline; otherwise a process pool is used.

    Returns:
        Results in the order of `ranges`
    """
    workers = workers or default_workers()
    if workers == 1 or len(ranges) <= 1:
        return [fn(lo, hi, *args) for lo, hi in ranges]

    logger.debug("pool.start", workers=workers, partitions=len(ranges))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, lo, hi, *args) for lo, hi in ranges]
        return [future.result() for future in futures]
