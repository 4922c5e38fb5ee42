"""
Family generators

Every member is checked numerically before it is returned: the equation by
direct multiplication, and for the Fermat-Pell family k itself comes from
hall_k rather than from any closed form.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Union

from ..arith.exact import HallPoint, hall_k, ratio_at_least
from ..exceptions import EquationMismatchError, FamilyParameterError, NonIntegralFamilyError
from ..logging_config import PerformanceLogger, get_logger
from ..models import FamilyKind, Hit
from ..parallel import partition_range, run_partitioned

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class FamilyMember:
    """
    One member of a family

    Attributes:
        family: Which family produced it
        t: Family parameter (the scale factor for scaled points)
        point: The (x, y, k) triple
    """

    family: FamilyKind
    t: int
    point: HallPoint

    def to_hit(self) -> Hit:
        return Hit.from_point(self.point, self.family.source)

    def to_dict(self) -> dict:
        """Convert to dictionary"""
        return {"family": self.family.value, "t": self.t, **self.point.to_dict()}


def _require_integral(value: Fraction, name: str, t: int) -> int:
    if value.denominator != 1:
        raise NonIntegralFamilyError(
            f"{name}(t) is not an integer",
            context={"t": t, name: str(value)},
        )
    return value.numerator


def _checked(point: HallPoint, family: FamilyKind, t: int) -> FamilyMember:
    if not point.satisfies_equation():
        raise EquationMismatchError(
            "family member fails x^3 - y^2 = k",
            context={"family": family.value, "t": t, **point.to_dict()},
        )
    return FamilyMember(family=family, t=t, point=point)


def hall_family(t: int) -> FamilyMember:
    """
    Member of Hall's one-parameter family

    x = t(t^9 + 6t^6 + 15t^3 + 12)/9
    y = t^15/27 + (t^12 + 4t^9 + 8t^6)/3 + (5t^3 + 1)/2
    k = -(3t^6 + 14t^3 + 27)/108

    Args:
        t: Parameter with t = 3 (mod 6); negative values allowed

    Raises:
        FamilyParameterError: t is not 3 mod 6
        NonIntegralFamilyError: x, y or k is not an integer
    """
    if t % 6 != 3:
        raise FamilyParameterError("hall family needs t = 3 (mod 6)", context={"t": t})

    t3 = t**3
    t6 = t3 * t3
    t9 = t6 * t3
    x = Fraction(t * (t9 + 6 * t6 + 15 * t3 + 12), 9)
    y = Fraction(t9 * t6, 27) + Fraction(t6 * t6 + 4 * t9 + 8 * t6, 3) + Fraction(5 * t3 + 1, 2)
    k = Fraction(-(3 * t6 + 14 * t3 + 27), 108)

    point = HallPoint(
        x=_require_integral(x, "x", t),
        y=abs(_require_integral(y, "y", t)),
        k=_require_integral(k, "k", t),
    )
    return _checked(point, FamilyKind.HALL, t)


def hall_family_range(t_values: Iterable[int]) -> List[FamilyMember]:
    """Members for every admissible t in t_values; others are skipped"""
    return [hall_family(t) for t in t_values if t % 6 == 3]


def fermat_pell_x(t: int) -> int:
    """x = 5^5 t^2 + 3000t + 719"""
    return 3125 * t * t + 3000 * t + 719


def fermat_pell_member(t: int) -> FamilyMember:
    """Fermat-Pell member with k evaluated directly"""
    x = fermat_pell_x(t)
    return _checked(hall_k(x), FamilyKind.FERMAT_PELL, t)


def _fermat_pell_partition(t_lo: int, t_hi: int, theta: Fraction) -> List[FamilyMember]:
    members = []
    with PerformanceLogger(logger, "families.partition_done", t_lo=t_lo, t_hi=t_hi):
        for t in range(t_lo, t_hi + 1):
            point = hall_k(fermat_pell_x(t))
            if point.k != 0 and ratio_at_least(point.x, point.k, theta):
                members.append(_checked(point, FamilyKind.FERMAT_PELL, t))
    return members


def fermat_pell_scan(
    t_lo: int,
    t_hi: int,
    theta: Union[Fraction, int] = 1,
    workers: Optional[int] = 1,
) -> List[FamilyMember]:
    """
    Fermat-Pell members over [t_lo, t_hi] with sqrt(x)/|k| >= theta

    Returns:
        Members in increasing t
    """
    if t_lo > t_hi:
        raise FamilyParameterError("empty t range", context={"t_lo": t_lo, "t_hi": t_hi})
    theta = Fraction(theta)
    parts = (workers or 1) * 4
    results = run_partitioned(
        _fermat_pell_partition, partition_range(t_lo, t_hi, parts), workers, theta
    )
    return [member for partition in results for member in partition]


def scale_solution(point: HallPoint, t: int) -> HallPoint:
    """
    (t^2 x, t^3 y, t^6 k)

    Only the equation carries over; t^3 y need not be nearest to (t^2 x)^{3/2}.
    """
    if t < 1:
        raise FamilyParameterError("scale factor must be positive", context={"t": t})
    if not point.satisfies_equation():
        raise EquationMismatchError("point to scale fails its equation", context=point.to_dict())
    scaled = HallPoint(x=t * t * point.x, y=t**3 * point.y, k=t**6 * point.k)
    if not scaled.satisfies_equation():
        raise EquationMismatchError("scaled point fails its equation", context=scaled.to_dict())
    return scaled


def scale_member(point: HallPoint, t: int) -> FamilyMember:
    return FamilyMember(family=FamilyKind.SCALED, t=t, point=scale_solution(point, t))
