"""
Closed forms for k along the points x0 + i

With t = a/b and z = x - t^2, the choice y = t^3 + (3/2)tz + C/b^3 gives

    x^3 - y^2 = z^3 + (3/4)t^2 z^2 - (3C/b^3)tz - (2C/b^3)t^3 - C^2/b^6

so k(x0 + i) is this cubic evaluated at z = i - alpha/b^2 whenever that y
is the nearest integer. Multiplying through by 4b^6 and writing
D = b^2 i - alpha keeps everything integral.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Tuple

from ..arith.modular import balanced_residue, mod_inverse
from ..exceptions import InexactDivisionError, InvalidInputError


def _check_ab(a: int, b: int) -> None:
    if b < 2 or a < 1:
        raise InvalidInputError("need a >= 1 and b >= 2", context={"a": a, "b": b})


def k_from_lemma(a: int, b: int, c2: int, i: int) -> int:
    """
    k(x0 + i) from the cleared-denominator closed form

    4b^6 k = -4*C2*a^3 + 3D^2 a^2 - 6*C2*D*a - C2^2 + 4D^3,  D = b^2 i - alpha

    Raises:
        InexactDivisionError: 4b^6 does not divide the numerator, i.e. the
            congruence tying (a, b, C2, i) together does not hold
    """
    _check_ab(a, b)
    b2 = b * b
    alpha = balanced_residue(a * a, b2)
    D = b2 * i - alpha
    numerator = -4 * c2 * a**3 + 3 * D * D * a * a - 6 * c2 * D * a - c2 * c2 + 4 * D**3
    denominator = 4 * b2**3
    k, remainder = divmod(numerator, denominator)
    if remainder:
        raise InexactDivisionError(
            "closed form is not integral for these parameters",
            context={"a": a, "b": b, "C2": c2, "i": i, "remainder": remainder},
        )
    return k


@dataclass(frozen=True)
class CubicPolynomial:
    """
    P(z) for one (b, C2, a), with exact rational coefficients

    Attributes:
        b: Denominator
        c2: 2C
        a: Numerator
        alpha: Balanced residue of a^2 modulo b^2
        coefficients: (z^3, z^2, z, 1) coefficients
        vertex_estimate: (3/4)t^2(alpha/b^2)^2 - (C2/b^3)t^3, the value near
            the minimum keeping only the t^3 terms
    """

    b: int
    c2: int
    a: int
    alpha: int
    coefficients: Tuple[Fraction, Fraction, Fraction, Fraction]
    vertex_estimate: Fraction

    @property
    def t(self) -> Fraction:
        return Fraction(self.a, self.b)

    def evaluate(self, z: Fraction) -> Fraction:
        result = Fraction(0)
        for coefficient in self.coefficients:
            result = result * z + coefficient
        return result

    def offset(self, i: int) -> Fraction:
        """z for the point x0 + i"""
        return i - Fraction(self.alpha, self.b * self.b)

    def evaluate_at_i(self, i: int) -> Fraction:
        return self.evaluate(self.offset(i))


def polynomial_p0(b: int, c2: int, a: int) -> CubicPolynomial:
    """Build the cubic for t = a/b and C = C2/2"""
    _check_ab(a, b)
    t = Fraction(a, b)
    c = Fraction(c2, 2)
    b3 = b**3
    alpha = balanced_residue(a * a, b * b)
    coefficients = (
        Fraction(1),
        Fraction(3, 4) * t * t,
        -3 * c / b3 * t,
        -2 * c / b3 * t**3 - c * c / b3**2,
    )
    vertex = Fraction(3, 4) * t * t * Fraction(alpha, b * b) ** 2 - Fraction(c2, b3) * t**3
    return CubicPolynomial(
        b=b,
        c2=c2,
        a=a,
        alpha=alpha,
        coefficients=coefficients,
        vertex_estimate=vertex,
    )


def c2_residue(a: int, b: int) -> Tuple[int, int]:
    """
    The residue 2C must take for a given a

    2C = a^3 (mod c1*c2*b^2) with c1 = 2 for even a, c2 = 3 when 3 | b
    (both 1 otherwise).

    Returns:
        (a^3 mod modulus, modulus)
    """
    _check_ab(a, b)
    modulus = (2 if a % 2 == 0 else 1) * (3 if b % 3 == 0 else 1) * b * b
    return pow(a, 3, modulus), modulus


def i_residue_class(a: int, b: int, c2: int) -> Optional[Tuple[int, int]]:
    """
    Residue class of the offsets i that pair with (a, b, C2)

    Solves 3b^2 a i = 3a*alpha - 2a^3 - C2 (mod 2b^3).

    Returns:
        (j, modulus) meaning i = j (mod modulus), or None when no i works
    """
    _check_ab(a, b)
    b2 = b * b
    two_b3 = 2 * b2 * b
    alpha = balanced_residue(a * a, b2)
    coefficient = 3 * b2 * a
    rhs = 3 * a * alpha - 2 * a**3 - c2
    g = gcd(coefficient, two_b3)
    if rhs % g:
        return None
    modulus = two_b3 // g
    if modulus == 1:
        return 0, 1
    j = (rhs // g) * mod_inverse(coefficient // g, modulus) % modulus
    return j, modulus
