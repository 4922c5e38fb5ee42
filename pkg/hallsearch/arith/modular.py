"""
Modular Arithmetic - factorization, balanced residues and cube roots

Cube roots modulo a composite are assembled from prime-power root sets:
- modulo a prime: a closed-form exponent when cubing is a bijection
  (p = 2 mod 3), otherwise a discrete cube root extraction that returns
  the root times every cube root of unity
- lifting p^e -> p^(e+1) by the derivative step for p != 3, and by scanning
  the three residues above each root for p = 3 (the derivative 3r^2 vanishes)
- the Cartesian product of per-prime-power sets combined through CRT
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, prod
from typing import Iterable, Iterator, List, Set, Tuple, Union

import numpy as np
from sympy.ntheory import isprime, nthroot_mod, perfect_power, pollard_rho

from ..exceptions import ArithmeticDomainError, NotCoprimeError, NotInvertibleError

PRIME_TABLE_LIMIT = 1_000_000


@lru_cache(maxsize=4)
def prime_table(limit: int = PRIME_TABLE_LIMIT) -> Tuple[int, ...]:
    """Primes below limit, sieved once and shared read-only"""
    sieve = np.ones(limit, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return tuple(int(p) for p in np.flatnonzero(sieve))


@dataclass(frozen=True, slots=True)
class FactoredInteger:
    """
    A positive integer with its prime-power factorization

    Attributes:
        n: The integer
        factors: (prime, exponent) pairs in increasing prime order
    """

    n: int
    factors: Tuple[Tuple[int, int], ...]

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.factors)

    def prime_powers(self) -> List[int]:
        """p^e for every factor"""
        return [p**e for p, e in self.factors]

    def power(self, m: int) -> "FactoredInteger":
        """Factorization of n^m without refactoring"""
        return FactoredInteger(self.n**m, tuple((p, e * m) for p, e in self.factors))

    def is_consistent(self) -> bool:
        """Product of p^e reproduces n and primes are increasing"""
        primes = [p for p, _ in self.factors]
        return prod(self.prime_powers()) == self.n and primes == sorted(set(primes))


def _split_large(n: int) -> List[int]:
    """Prime factors (with multiplicity) of a cofactor free of table primes"""
    if n == 1:
        return []
    if isprime(n):
        return [n]
    power = perfect_power(n)
    if power:
        base, exponent = power
        return _split_large(int(base)) * int(exponent)

    seed = 1
    while True:
        divisor = pollard_rho(n, a=seed, retries=5, seed=seed)
        if divisor is not None and 1 < divisor < n:
            divisor = int(divisor)
            return _split_large(divisor) + _split_large(n // divisor)
        seed += 1


def factorize(n: int) -> FactoredInteger:
    """
    Complete factorization of n >= 1

    Trial division by the prime table, then rho splitting with a primality
    test for whatever cofactor survives.
    """
    if n < 1:
        raise ArithmeticDomainError("factorize needs n >= 1", context={"n": n})

    counts: dict[int, int] = {}
    remaining = n
    for p in prime_table():
        if p * p > remaining:
            break
        if remaining % p == 0:
            e = 0
            while remaining % p == 0:
                remaining //= p
                e += 1
            counts[p] = e

    if remaining > 1:
        if remaining < PRIME_TABLE_LIMIT * PRIME_TABLE_LIMIT:
            counts[remaining] = counts.get(remaining, 0) + 1
        else:
            for q in _split_large(remaining):
                counts[q] = counts.get(q, 0) + 1

    return FactoredInteger(n, tuple(sorted(counts.items())))


def balanced_residue(v: int, m: int) -> int:
    """The representative alpha = v (mod m) with -m/2 < alpha <= m/2"""
    if m < 1:
        raise ArithmeticDomainError("modulus must be positive", context={"m": m})
    r = v % m
    return r - m if 2 * r > m else r


def mod_inverse(a: int, m: int) -> int:
    """Inverse of a modulo m in [0, m)"""
    if m < 1:
        raise ArithmeticDomainError("modulus must be positive", context={"m": m})
    try:
        return pow(a, -1, m)
    except ValueError as e:
        raise NotInvertibleError(
            "value is not invertible modulo m",
            context={"a": a, "m": m, "gcd": gcd(a, m)},
        ) from e


def _cube_roots_mod_prime(m: int, p: int) -> Set[int]:
    """All r in [0, p) with r^3 = m (mod p), for p not dividing m"""
    m %= p
    if p in (2, 3):
        # r^3 = r for every r modulo 2 and modulo 3
        return {m}
    if p % 3 == 2:
        return {pow(m, (2 * p - 1) // 3, p)}
    if pow(m, (p - 1) // 3, p) != 1:
        return set()
    roots = nthroot_mod(m, 3, p, all_roots=True) or []
    return {int(r) for r in roots}


def cube_roots_mod_prime_power(m: int, p: int, e: int) -> Set[int]:
    """
    Complete set {r in [0, p^e) : r^3 = m (mod p^e)}

    Args:
        m: Value coprime to p
        p: Prime
        e: Exponent >= 1

    Returns:
        Root set, empty when m is a cubic non-residue
    """
    if e < 1:
        raise ArithmeticDomainError("exponent must be >= 1", context={"p": p, "e": e})
    if m % p == 0:
        raise NotCoprimeError("p divides m", context={"m": m, "p": p})

    roots = _cube_roots_mod_prime(m, p)
    modulus = p
    for _ in range(1, e):
        next_modulus = modulus * p
        if p == 3:
            roots = {
                r + j * modulus
                for r in roots
                for j in range(3)
                if pow(r + j * modulus, 3, next_modulus) == m % next_modulus
            }
        else:
            lifted = set()
            for r in roots:
                f = (r * r * r - m) % next_modulus
                lifted.add((r - f * mod_inverse(3 * r * r, next_modulus)) % next_modulus)
            roots = lifted
        modulus = next_modulus
        if not roots:
            break
    return roots


def crt_basis(moduli: Iterable[int]) -> Tuple[int, List[int]]:
    """
    Idempotents e_i with e_i = 1 (mod m_i) and e_i = 0 (mod m_j), j != i

    Returns:
        (product of moduli, idempotents)
    """
    moduli = list(moduli)
    total = prod(moduli)
    basis = []
    for m in moduli:
        cofactor = total // m
        basis.append(cofactor * mod_inverse(cofactor, m) % total)
    return total, basis


def cube_roots_mod(m: int, modulus: Union[int, FactoredInteger]) -> Set[int]:
    """
    All cube roots of m modulo a composite

    Args:
        m: Value coprime to the modulus
        modulus: Modulus, or its factorization

    Returns:
        Complete root set; its size is the product of per-prime-power sizes
    """
    factored = modulus if isinstance(modulus, FactoredInteger) else factorize(modulus)
    if gcd(m, factored.n) != 1:
        raise NotCoprimeError("m shares a factor with the modulus", context={"m": m, "n": factored.n})
    if factored.n == 1:
        return {0}

    per_factor = []
    for p, e in factored:
        roots = cube_roots_mod_prime_power(m, p, e)
        if not roots:
            return set()
        per_factor.append(sorted(roots))

    total, basis = crt_basis(factored.prime_powers())
    return {
        sum(r * b for r, b in zip(combination, basis)) % total
        for combination in itertools.product(*per_factor)
    }
