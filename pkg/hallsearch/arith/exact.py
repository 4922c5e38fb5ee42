"""
Exact Arithmetic - big-integer primitives and the definition of k(x)

k(x) = x^3 - y^2 with y the integer nearest to x^{3/2}. Everything here is
exact: square roots are integer Newton iterations with a floor correction,
and ratio thresholds are compared after squaring.

Features:
- isqrt / iroot on arbitrary-size integers
- nearest_root_square and hall_k
- exact ratio threshold test and half-up decimal rendering
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..exceptions import InvalidInputError


def isqrt(n: int) -> int:
    """
    Floor of the square root of n

    Newton iteration started above the root, so the sequence decreases
    monotonically to the floor; the final loops only guard the last digit.
    """
    if n < 0:
        raise InvalidInputError("isqrt of a negative number", context={"n": n})
    if n < 2:
        return n

    x = 1 << ((n.bit_length() + 1) // 2)
    while True:
        y = (x + n // x) >> 1
        if y >= x:
            break
        x = y

    while x * x > n:
        x -= 1
    while (x + 1) * (x + 1) <= n:
        x += 1
    return x


def iroot(n: int, k: int) -> int:
    """Floor of the k-th root of a nonnegative n"""
    if n < 0 or k < 1:
        raise InvalidInputError("iroot needs n >= 0 and k >= 1", context={"n": n, "k": k})
    if k == 1 or n < 2:
        return n
    if k == 2:
        return isqrt(n)

    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y

    while x**k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def nearest_root_square(n: int) -> int:
    """
    The integer y minimizing |n - y^2|

    With s = isqrt(n) the candidates are s and s + 1. A tie would need
    2n = 2s^2 + 2s + 1, impossible by parity, so n - s^2 <= s decides.
    """
    if n < 1:
        raise InvalidInputError("nearest_root_square needs n >= 1", context={"n": n})
    s = isqrt(n)
    return s if n - s * s <= s else s + 1


@dataclass(frozen=True, slots=True)
class HallPoint:
    """
    An (x, y, k) triple with x^3 - y^2 = k

    Points produced by hall_k also have y nearest to x^{3/2}; scaled family
    points only guarantee the equation.
    """

    x: int
    y: int
    k: int

    def satisfies_equation(self) -> bool:
        """Re-check x^3 - y^2 = k by independent multiplication"""
        return self.x * self.x * self.x - self.y * self.y == self.k

    def is_nearest(self) -> bool:
        """True when y is the nearest integer to x^{3/2}"""
        return self.x >= 1 and self.y == nearest_root_square(self.x**3)

    def within_hall_bound(self) -> bool:
        """|k| <= x^{3/2} + 1/4, in the integer form (4|k| - 1)^2 <= 16 x^3"""
        return (4 * abs(self.k) - 1) ** 2 <= 16 * self.x**3

    def to_dict(self) -> dict[str, int]:
        """Convert to dictionary"""
        return {"x": self.x, "y": self.y, "k": self.k}


def hall_k(x: int) -> HallPoint:
    """
    Evaluate k(x) = x^3 - round(x^{3/2})^2 exactly

    Args:
        x: Integer >= 2

    Returns:
        HallPoint with y nearest to x^{3/2}
    """
    if x < 2:
        raise InvalidInputError("hall_k needs x >= 2", context={"x": x})
    cube = x * x * x
    y = nearest_root_square(cube)
    return HallPoint(x=x, y=y, k=cube - y * y)


def ratio_at_least(x: int, k: int, theta: Union[Fraction, int]) -> bool:
    """sqrt(x)/|k| >= p/q, decided as q^2 x >= p^2 k^2"""
    if k == 0:
        raise InvalidInputError("ratio undefined for k = 0", context={"x": x})
    theta = Fraction(theta)
    if theta <= 0:
        raise InvalidInputError("theta must be positive", context={"theta": theta})
    p, q = theta.numerator, theta.denominator
    return q * q * x >= p * p * k * k


def round_half_away(numerator: int, denominator: int) -> int:
    """Round numerator/denominator to the nearest integer, halves away from zero"""
    if denominator == 0:
        raise InvalidInputError("zero denominator")
    if denominator < 0:
        numerator, denominator = -numerator, -denominator
    magnitude = (2 * abs(numerator) + denominator) // (2 * denominator)
    return magnitude if numerator >= 0 else -magnitude


def _sqrt_ratio_scaled(num: int, den: int, digits: int) -> int:
    """
    round_half_up(sqrt(num/den) * 10^digits)

    floor(sqrt(r)) = isqrt(floor(r)) for real r >= 0, so with
    m = floor(2 * 10^digits * sqrt(num/den)) the rounded value is (m + 1) // 2.
    """
    m = isqrt((4 * num * 10 ** (2 * digits)) // den)
    return (m + 1) // 2


def format_fixed(scaled: int, digits: int) -> str:
    """Render scaled / 10^digits with exactly `digits` decimals"""
    if digits == 0:
        return str(scaled)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def ratio_decimal(x: int, k: int, digits: int = 2) -> str:
    """sqrt(x)/|k| rounded half-up to `digits` decimals"""
    if k == 0:
        raise InvalidInputError("ratio undefined for k = 0", context={"x": x})
    if digits < 0:
        raise InvalidInputError("digits must be >= 0", context={"digits": digits})
    return format_fixed(_sqrt_ratio_scaled(x, k * k, digits), digits)


def inverse_ratio_decimal(x: int, k: int, digits: int = 6) -> str:
    """|k|/sqrt(x) rounded half-up to `digits` decimals"""
    if x < 1:
        raise InvalidInputError("inverse ratio needs x >= 1", context={"x": x})
    return format_fixed(_sqrt_ratio_scaled(k * k, x, digits), digits)
