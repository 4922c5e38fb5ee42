"""
Arithmetic Layer - exact integer primitives used by every other package

- exact: isqrt, nearest_root_square, hall_k, exact ratio tests
- modular: factorization, balanced residues, inverses, cube roots mod n
"""

from .exact import (
    HallPoint,
    format_fixed,
    hall_k,
    inverse_ratio_decimal,
    iroot,
    isqrt,
    nearest_root_square,
    ratio_at_least,
    ratio_decimal,
    round_half_away,
)
from .modular import (
    FactoredInteger,
    balanced_residue,
    crt_basis,
    cube_roots_mod,
    cube_roots_mod_prime_power,
    factorize,
    mod_inverse,
    prime_table,
)

__all__ = [
    "HallPoint",
    "format_fixed",
    "hall_k",
    "inverse_ratio_decimal",
    "iroot",
    "isqrt",
    "nearest_root_square",
    "ratio_at_least",
    "ratio_decimal",
    "round_half_away",
    "FactoredInteger",
    "balanced_residue",
    "crt_basis",
    "cube_roots_mod",
    "cube_roots_mod_prime_power",
    "factorize",
    "mod_inverse",
    "prime_table",
]
