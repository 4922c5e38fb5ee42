"""
Candidate Generation - from a (b, C) cell to the numerators a worth testing

For t = a/b, alpha = balanced(a^2 mod b^2) and x0 = (a^2 - alpha)/b^2, the
points x0 + i lie on cubic polynomials indexed by C. The search fixes the
class i = 0 with its vertex at omega = 0, which pins a through

    2a^3 - 3*alpha*a + C2 = 0 (mod 2b^3),   C2 = 2C

Pipeline per cell:
1. a0: every cube root of C2 modulo b^2
2. k0: lift a0 + k*b^2 to a solution modulo 2b^3 (may fail; counted)
3. n:  pick the period n*(2b^3/d) that puts a near 3*alpha^2/(8C)
4. emit a for n-W..n+W, each re-checked against the congruence

C is carried as the integer C2 = 2C throughout so half-integer C is exact.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Tuple

from ..arith.exact import iroot, round_half_away
from ..arith.modular import (
    FactoredInteger,
    balanced_residue,
    cube_roots_mod,
    factorize,
    mod_inverse,
)
from ..exceptions import CongruenceViolationError, InvalidCellError


@dataclass(frozen=True, slots=True)
class SearchCell:
    """
    One (b, C) unit of the search

    Attributes:
        b: Denominator, >= 2
        c2: 2C, a positive integer coprime to b (odd when b is even)
    """

    b: int
    c2: int

    def __post_init__(self) -> None:
        if self.b < 2 or self.c2 < 1:
            raise InvalidCellError("cell needs b >= 2 and C2 >= 1", context={"b": self.b, "C2": self.c2})
        if gcd(self.c2, self.b) != 1:
            raise InvalidCellError("gcd(C2, b) must be 1", context={"b": self.b, "C2": self.c2})

    @property
    def c(self) -> Fraction:
        """C itself"""
        return Fraction(self.c2, 2)


@dataclass(frozen=True, slots=True)
class Candidate:
    """
    A numerator a produced for a cell, with every intermediate

    Attributes:
        cell: Originating cell
        a0: Cube root of C2 modulo b^2
        alpha: Balanced residue of a^2 modulo b^2
        d: gcd(3(2a0^2 - alpha), 2b)
        k0: Lift of a0 to modulo 2b^3, in [0, 2b/d)
        n: Period index actually used
        a: a0 + k0*b^2 + n*(2b^3/d)
        x0: (a^2 - alpha)/b^2
    """

    cell: SearchCell
    a0: int
    alpha: int
    d: int
    k0: int
    n: int
    a: int
    x0: int

    def congruence_holds(self) -> bool:
        """2a^3 - 3*alpha*a + C2 = 0 (mod 2b^3), by direct substitution"""
        b, a = self.cell.b, self.a
        return (2 * a**3 - 3 * self.alpha * a + self.cell.c2) % (2 * b**3) == 0

    def to_dict(self) -> Dict[str, int]:
        """Convert to dictionary"""
        return {
            "b": self.cell.b,
            "C2": self.cell.c2,
            "a0": self.a0,
            "alpha": self.alpha,
            "d": self.d,
            "k0": self.k0,
            "n": self.n,
            "a": self.a,
            "x0": self.x0,
        }


def c2_cap(b: int, u: Fraction) -> int:
    """floor(2 * b^u) computed exactly as an integer root"""
    return iroot(2**u.denominator * b**u.numerator, u.denominator)


def admissible_cells(
    b: int,
    u: Fraction = Fraction(1, 3),
    c2_cap_override: Optional[int] = None,
) -> List[SearchCell]:
    """
    All cells for a denominator b

    Args:
        b: Denominator, >= 2
        u: Exponent of the cap C <= b^u
        c2_cap_override: Explicit cap on C2, replacing floor(2 b^u)

    Returns:
        Cells with C2 in [1, cap], gcd(C2, b) = 1 and C2 odd when b is even
    """
    if b < 2:
        raise InvalidCellError("b must be >= 2", context={"b": b})
    cap = c2_cap_override if c2_cap_override is not None else c2_cap(b, Fraction(u))
    step = 2 if b % 2 == 0 else 1
    return [SearchCell(b, c2) for c2 in range(1, cap + 1, step) if gcd(c2, b) == 1]


def solve_a0(cell: SearchCell, b2_factors: Optional[FactoredInteger] = None) -> List[int]:
    """
    Cube roots of C2 modulo b^2, ascending

    Args:
        cell: The cell
        b2_factors: Factorization of b^2 when the caller already has it
    """
    factored = b2_factors if b2_factors is not None else factorize(cell.b).power(2)
    return sorted(cube_roots_mod(cell.c2, factored))


def lift_k0(b: int, a0: int, alpha: int, c2: int) -> Optional[Tuple[int, int]]:
    """
    Lift a0 (mod b^2) to a solution of the cell congruence modulo 2b^3

    Substituting a = a0 + k*b^2 leaves 3b^2(2a0^2 - alpha)k = -N (mod 2b^3)
    with N = 2a0^3 - 3*alpha*a0 + C2, which is solvable iff d*b^2 | N.

    Returns:
        (d, k0) with k0 in [0, 2b/d), or None when the lift does not exist
    """
    b2 = b * b
    coefficient = 3 * (2 * a0 * a0 - alpha)
    d = gcd(coefficient, 2 * b)
    n_value = 2 * a0**3 - 3 * alpha * a0 + c2
    if n_value % (d * b2):
        return None
    modulus = 2 * b // d
    k0 = (-mod_inverse(coefficient // d, modulus) * (n_value // (d * b2))) % modulus
    return d, k0


def select_n(b: int, c2: int, alpha: int, a0: int, k0: int, d: int) -> int:
    """
    Period index placing a near the vertex value 3*alpha^2/(8C)

    n = round((d / 2b^3) * (3*alpha^2/(4*C2) - a0 - k0*b^2)), halves away
    from zero, evaluated over the common denominator 8*b^3*C2.
    """
    numerator = d * (3 * alpha * alpha - 4 * c2 * (a0 + k0 * b * b))
    denominator = 8 * b**3 * c2
    return round_half_away(numerator, denominator)


@dataclass
class BuilderStats:
    """Counters accumulated over the cells a builder has processed"""

    cells: int = 0
    roots: int = 0
    lifts_failed: int = 0
    candidates: int = 0
    discarded: int = 0

    def merge(self, other: "BuilderStats") -> None:
        self.cells += other.cells
        self.roots += other.roots
        self.lifts_failed += other.lifts_failed
        self.candidates += other.candidates
        self.discarded += other.discarded

    def to_dict(self) -> Dict[str, int]:
        """Convert to dictionary"""
        return {
            "cells": self.cells,
            "roots": self.roots,
            "lifts_failed": self.lifts_failed,
            "candidates": self.candidates,
            "discarded": self.discarded,
        }


class CandidateBuilder:
    """
    Builds candidates cell by cell and keeps counters

    Example:
        >>> builder = CandidateBuilder(n_window=1)
        >>> [c.x0 for c in builder.build(SearchCell(26, 1))]
    """

    def __init__(self, n_window: int = 1):
        if n_window < 0:
            raise InvalidCellError("n_window must be >= 0", context={"n_window": n_window})
        self.n_window = n_window
        self.stats = BuilderStats()

    def build(self, cell: SearchCell, b2_factors: Optional[FactoredInteger] = None) -> List[Candidate]:
        """
        Candidates for one cell

        Args:
            cell: The cell
            b2_factors: Factorization of b^2, if already known

        Returns:
            Candidates in (a0, n) order; possibly empty
        """
        b, c2 = cell.b, cell.c2
        b2 = b * b
        two_b3 = 2 * b2 * b

        self.stats.cells += 1
        candidates: List[Candidate] = []

        for a0 in solve_a0(cell, b2_factors):
            self.stats.roots += 1
            alpha0 = balanced_residue(a0 * a0, b2)
            lifted = lift_k0(b, a0, alpha0, c2)
            if lifted is None:
                self.stats.lifts_failed += 1
                continue
            d, k0 = lifted
            step = two_b3 // d
            n_star = select_n(b, c2, alpha0, a0, k0, d)
            base = a0 + k0 * b2

            for n in range(n_star - self.n_window, n_star + self.n_window + 1):
                a = base + n * step
                if a <= b or gcd(a, b) != 1:
                    self.stats.discarded += 1
                    continue
                alpha = balanced_residue(a * a, b2)
                x0, remainder = divmod(a * a - alpha, b2)
                candidate = Candidate(
                    cell=cell, a0=a0, alpha=alpha, d=d, k0=k0, n=n, a=a, x0=x0
                )
                if alpha != alpha0 or remainder or not candidate.congruence_holds():
                    raise CongruenceViolationError(
                        "generated candidate fails its defining congruence",
                        context=candidate.to_dict(),
                    )
                candidates.append(candidate)

        self.stats.candidates += len(candidates)
        return candidates


def build_candidates(
    cell: SearchCell,
    n_window: int = 1,
    b2_factors: Optional[FactoredInteger] = None,
) -> List[Candidate]:
    """Candidates for one cell with a throwaway builder"""
    return CandidateBuilder(n_window).build(cell, b2_factors)
