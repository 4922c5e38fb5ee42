"""
Parametric Families - closed-form sources of good examples

- hall: x = t(t^9 + 6t^6 + 15t^3 + 12)/9 for t = 3 (mod 6)
- fermat_pell: x = 3125t^2 + 3000t + 719, kept when k(x) is small
- scaling: (x, y, k) -> (t^2 x, t^3 y, t^6 k)
"""

from .generators import (
    FamilyMember,
    fermat_pell_member,
    fermat_pell_scan,
    fermat_pell_x,
    hall_family,
    hall_family_range,
    scale_member,
    scale_solution,
)

__all__ = [
    "FamilyMember",
    "fermat_pell_member",
    "fermat_pell_scan",
    "fermat_pell_x",
    "hall_family",
    "hall_family_range",
    "scale_member",
    "scale_solution",
]
