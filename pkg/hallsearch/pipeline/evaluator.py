"""
Evaluator - exact k(x) around each candidate's x0
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Union

from ..arith.exact import HallPoint, hall_k, ratio_at_least
from ..exceptions import EquationMismatchError
from ..models import Hit, HitSource
from .candidates import Candidate


@dataclass
class CandidateEvaluation:
    """
    Outcome of one candidate window

    Attributes:
        hits: Points with sqrt(x)/|k| >= theta
        near_misses: Points between log_theta and theta (never written out)
    """

    hits: List[Hit] = field(default_factory=list)
    near_misses: List[Hit] = field(default_factory=list)


def verify_point(point: HallPoint) -> None:
    """
    Re-check a point without going through isqrt

    x^3 - y^2 must equal k and y must be the nearest integer to x^{3/2},
    which for y > 0 means -y < k <= y.
    """
    cube = point.x * point.x * point.x
    if cube - point.y * point.y != point.k or not (-point.y < point.k <= point.y):
        raise EquationMismatchError(
            "evaluated point fails re-verification",
            context=point.to_dict(),
        )


def evaluate_window(
    cand: Candidate,
    i_window: int = 2,
    theta: Union[Fraction, int] = 1,
    log_theta: Optional[Union[Fraction, int]] = None,
    min_x: int = 10,
) -> CandidateEvaluation:
    """
    Evaluate x0 + i for i in [-i_window, i_window]

    Args:
        cand: Candidate to evaluate
        i_window: Offsets on either side of x0
        theta: Reporting threshold on sqrt(x)/|k|
        log_theta: Optional lower threshold for near misses
        min_x: Points below this x are skipped

    Returns:
        CandidateEvaluation with hits and near misses in increasing x
    """
    result = CandidateEvaluation()
    for i in range(-i_window, i_window + 1):
        x = cand.x0 + i
        if x < max(2, min_x):
            continue
        point = hall_k(x)
        if point.k == 0:
            continue

        if ratio_at_least(point.x, point.k, theta):
            bucket = result.hits
        elif log_theta is not None and ratio_at_least(point.x, point.k, log_theta):
            bucket = result.near_misses
        else:
            continue

        verify_point(point)
        bucket.append(
            Hit.from_point(point, HitSource.SEARCH, b=cand.cell.b, c2=cand.cell.c2, a=cand.a)
        )
    return result


def evaluate_candidate(
    cand: Candidate,
    i_window: int = 2,
    theta: Union[Fraction, int] = 1,
    min_x: int = 10,
) -> List[Hit]:
    """Hits of one candidate at threshold theta"""
    return evaluate_window(cand, i_window, theta, None, min_x).hits
