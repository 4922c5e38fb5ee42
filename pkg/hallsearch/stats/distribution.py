"""
Ratio statistics

Ratios become floats only here; every selection upstream is an exact integer
comparison. The uniformity test uses the asymptotic Kolmogorov distribution
of sqrt(N) * D.
"""

import math
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

import numpy as np
from scipy.special import kolmogorov

from ..exceptions import InvalidInputError
from ..models import Hit, RatioSample

RatioLike = Union[RatioSample, str, float, int]

COUNT_MODEL_FACTOR = 0.80


def _as_array(samples: Iterable[RatioLike]) -> np.ndarray:
    values = [float(s.ratio) if isinstance(s, RatioSample) else float(s) for s in samples]
    if not values:
        raise InvalidInputError("no samples")
    return np.asarray(values, dtype=np.float64)


@dataclass(frozen=True)
class KSResult:
    """Kolmogorov-Smirnov statistic against the uniform law on (0, upper]"""

    d: float
    p_value: float
    n: int


def ks_uniform(samples: Iterable[RatioLike], upper: float = 16) -> KSResult:
    """
    Test samples for uniformity on (0, upper]

    Args:
        samples: Ratios in (0, upper]
        upper: Right end of the support

    Returns:
        KSResult with D = sup |F_emp(u) - u/upper|
    """
    values = _as_array(samples)
    if upper <= 0:
        raise InvalidInputError("upper must be positive", context={"upper": upper})
    if values.min() <= 0 or values.max() > upper:
        raise InvalidInputError(
            "samples outside (0, upper]",
            context={"min": values.min(), "max": values.max(), "upper": upper},
        )

    n = values.size
    cdf = np.sort(values) / upper
    ranks = np.arange(1, n + 1, dtype=np.float64)
    d_plus = np.max(ranks / n - cdf)
    d_minus = np.max(cdf - (ranks - 1) / n)
    d = float(max(d_plus, d_minus))
    return KSResult(d=d, p_value=float(kolmogorov(math.sqrt(n) * d)), n=n)


def mean_ratio(samples: Iterable[RatioLike]) -> float:
    """Arithmetic mean of the ratios"""
    return float(np.mean(_as_array(samples)))


def count_model(x_max: float, n: float, base: Optional[float] = None) -> float:
    """
    Expected count of x <= x_max with |k| <= n*sqrt(x): 0.80 * n * log(x_max)

    Args:
        x_max: Scan bound, > 1
        n: Ratio bound, >= 1
        base: Logarithm base; natural log when None or 0
    """
    if x_max <= 1 or n < 1:
        raise InvalidInputError("count model needs x_max > 1 and n >= 1", context={"x_max": x_max, "n": n})
    log = math.log(x_max) if not base else math.log(x_max, base)
    return COUNT_MODEL_FACTOR * n * log


def histogram(samples: Iterable[RatioLike], upper: int = 16) -> List[int]:
    """Counts per unit bin [0,1), [1,2), ..., [upper-1, upper]"""
    counts, _ = np.histogram(_as_array(samples), bins=np.arange(0, upper + 1))
    return [int(c) for c in counts]


def ratio_samples_from_hits(hits: Iterable[Hit], n_max: Optional[int] = None) -> List[RatioSample]:
    """
    Samples from a hit list, e.g. a search run with theta = 1/n_max

    Hits with |k| > n_max*sqrt(x) are dropped when n_max is given.
    """
    samples = []
    for hit in hits:
        if n_max is not None and hit.k * hit.k > n_max * n_max * hit.x:
            continue
        samples.append(RatioSample.from_point(hit.x, hit.k))
    return samples


@dataclass
class StatsReport:
    """Everything the stats command prints"""

    n: int
    upper: int
    x_max: int
    mean: float
    ks: KSResult
    model_count: float
    histogram: List[int] = field(default_factory=list)

    @property
    def model_ratio(self) -> float:
        """Observed over modelled count"""
        return self.n / self.model_count

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "n": self.n,
            "upper": self.upper,
            "x_max": self.x_max,
            "mean": self.mean,
            "ks_d": self.ks.d,
            "ks_p": self.ks.p_value,
            "model_count": self.model_count,
            "model_ratio": self.model_ratio,
            "histogram": self.histogram,
        }


def build_report(
    samples: Sequence[RatioLike],
    upper: int,
    x_max: int,
    base: Optional[float] = None,
) -> StatsReport:
    """Mean, KS test, count model and histogram for one sample set"""
    return StatsReport(
        n=len(samples),
        upper=upper,
        x_max=x_max,
        mean=mean_ratio(samples),
        ks=ks_uniform(samples, upper),
        model_count=count_model(x_max, upper, base),
        histogram=histogram(samples, upper),
    )
