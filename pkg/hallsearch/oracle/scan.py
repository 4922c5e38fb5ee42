"""
Brute-force oracle - k(x) for every x in a range

y is carried from one x to the next: s = isqrt(x^3) grows by about
(3/2)sqrt(x) per step, so each step adds 3*isqrt(x)//2 and then corrects by
whole units in whichever direction is needed. A full isqrt re-check runs
every `recheck_period` steps.
"""

import csv
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, List, Optional

from ..arith.exact import HallPoint, isqrt
from ..config import get_settings
from ..exceptions import ConfigurationError, EquationMismatchError, OutputWriteError
from ..logging_config import PerformanceLogger, get_logger
from ..models import Hit, HitSource, RatioSample
from ..parallel import default_workers, partition_range, run_partitioned

logger = get_logger(__name__)


@dataclass
class BruteScanResult:
    """
    Samples and hits of a scan

    Attributes:
        samples: Points with |k| <= n_max*sqrt(x), increasing x
        hits: Points with |k| <= sqrt(x), increasing x
        evaluated: Non-square x evaluated
        squares_skipped: Perfect squares in the range (k = 0)
    """

    x_lo: int
    x_hi: int
    n_max: int
    samples: List[RatioSample] = field(default_factory=list)
    hits: List[Hit] = field(default_factory=list)
    evaluated: int = 0
    squares_skipped: int = 0

    def merge(self, other: "BruteScanResult") -> None:
        """Append a later partition"""
        self.samples.extend(other.samples)
        self.hits.extend(other.hits)
        self.evaluated += other.evaluated
        self.squares_skipped += other.squares_skipped
        self.x_hi = max(self.x_hi, other.x_hi)

    @property
    def hit_xs(self) -> List[int]:
        return [hit.x for hit in self.hits]


def scan_partition(x_lo: int, x_hi: int, n_max: int, recheck_period: int) -> BruteScanResult:
    """Scan one contiguous range"""
    result = BruteScanResult(x_lo=x_lo, x_hi=x_hi, n_max=n_max)
    n_max_sq = n_max * n_max
    r = isqrt(x_lo)
    s = isqrt(x_lo**3)

    with PerformanceLogger(logger, "oracle.partition_done", x_lo=x_lo, x_hi=x_hi):
        for step, x in enumerate(range(x_lo, x_hi + 1)):
            cube = x * x * x
            if step:
                if (r + 1) * (r + 1) <= x:
                    r += 1
                s += (3 * r) >> 1
                while s * s > cube:
                    s -= 1
                while (s + 1) * (s + 1) <= cube:
                    s += 1
                if step % recheck_period == 0 and (s != isqrt(cube) or r != isqrt(x)):
                    raise EquationMismatchError(
                        "incremental root drifted from isqrt",
                        context={"x": x, "s": s, "r": r},
                    )

            if r * r == x:
                result.squares_skipped += 1
                continue
            result.evaluated += 1

            y = s if cube - s * s <= s else s + 1
            k = cube - y * y
            k_sq = k * k
            if k_sq > n_max_sq * x:
                continue
            result.samples.append(RatioSample.from_point(x, k))
            if k_sq <= x:
                result.hits.append(Hit.from_point(HallPoint(x=x, y=y, k=k), HitSource.BRUTE))
    return result


def brute_scan(
    x_lo: int,
    x_hi: int,
    n_max: int = 16,
    workers: Optional[int] = 1,
    force: bool = False,
    recheck_period: Optional[int] = None,
) -> BruteScanResult:
    """
    Evaluate k(x) for every non-square x in [x_lo, x_hi]

    Args:
        x_lo: Lower end, >= 2
        x_hi: Upper end
        n_max: Sample bound on |k|/sqrt(x)
        workers: Processes; None picks from the CPU count
        force: Allow ranges beyond the large-scan guard
        recheck_period: Steps between full isqrt re-checks

    Returns:
        BruteScanResult merged in increasing x

    Raises:
        ConfigurationError: Invalid range, or a large range without force
    """
    settings = get_settings().oracle
    if x_lo < 2 or x_lo > x_hi:
        raise ConfigurationError(
            "oracle range needs 2 <= x_lo <= x_hi",
            context={"x_lo": x_lo, "x_hi": x_hi},
        )
    if n_max < 1:
        raise ConfigurationError("n_max must be >= 1", context={"n_max": n_max})
    if x_hi > settings.large_scan_x:
        if not force:
            raise ConfigurationError(
                "range exceeds the large-scan guard; pass force to run it",
                context={"x_hi": x_hi, "guard": settings.large_scan_x},
            )
        logger.warning("oracle.large_scan", x_lo=x_lo, x_hi=x_hi, guard=settings.large_scan_x)

    period = recheck_period or settings.recheck_period
    workers = workers or default_workers()
    parts = 1 if workers == 1 else workers * 4
    partitions = run_partitioned(scan_partition, partition_range(x_lo, x_hi, parts), workers, n_max, period)

    merged = BruteScanResult(x_lo=x_lo, x_hi=x_lo, n_max=n_max)
    for partition in partitions:
        merged.merge(partition)
    logger.info(
        "oracle.scan_done",
        x_lo=x_lo,
        x_hi=x_hi,
        evaluated=merged.evaluated,
        samples=len(merged.samples),
        hits=len(merged.hits),
    )
    return merged


def write_samples_csv(path: Path, samples: Iterable[RatioSample]) -> int:
    """
    Dump samples as CSV (x, k, ratio)

    Returns:
        Number of rows written
    """
    path = Path(path)
    count = 0
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="", encoding="utf-8") as f:
            writer = csv.writer(f)
            writer.writerow(["x", "k", "ratio"])
            for sample in samples:
                writer.writerow([sample.x, sample.k, sample.ratio])
                count += 1
    except OSError as e:
        raise OutputWriteError(f"Cannot write samples: {e}", context={"path": str(path)}) from e
    return count

