"""
Tests for factorization and cube roots modulo composites
"""

from math import gcd, prod

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from hallsearch.arith import (
    balanced_residue,
    crt_basis,
    cube_roots_mod,
    cube_roots_mod_prime_power,
    factorize,
    mod_inverse,
    prime_table,
)
from hallsearch.exceptions import ArithmeticDomainError, NotCoprimeError, NotInvertibleError


def brute_cube_roots(m: int, n: int) -> set[int]:
    return {r for r in range(n) if pow(r, 3, n) == m % n}


class TestFactorize:
    def test_small(self):
        assert factorize(676).factors == ((2, 2), (13, 2))
        assert factorize(1).factors == ()
        assert factorize(2).factors == ((2, 1),)

    def test_rejects_nonpositive(self):
        with pytest.raises(ArithmeticDomainError):
            factorize(0)

    @given(st.integers(min_value=1, max_value=10**12))
    def test_consistent(self, n):
        factored = factorize(n)
        assert factored.is_consistent()
        assert factored.n == n

    def test_large_semiprime_uses_rho(self):
        p, q = 2**31 - 1, 2**61 - 1
        assert factorize(p * q).factors == ((p, 1), (q, 1))

    def test_large_square(self):
        p = 2**31 - 1
        assert factorize(p * p * 4).factors == ((2, 2), (p, 2))

    def test_power(self):
        assert factorize(26).power(2).factors == factorize(676).factors

    def test_prime_table(self):
        primes = prime_table(100)
        assert primes[:5] == (2, 3, 5, 7, 11)
        assert len(primes) == 25


class TestResidues:
    def test_balanced(self):
        assert balanced_residue(3, 4) == -1
        assert balanced_residue(2, 4) == 2
        assert balanced_residue(529, 676) == -147
        assert balanced_residue(653, 676) == -23

    @given(st.integers(), st.integers(min_value=1, max_value=10**6))
    def test_balanced_range(self, v, m):
        alpha = balanced_residue(v, m)
        assert (alpha - v) % m == 0
        assert -m < 2 * alpha <= m

    def test_mod_inverse(self):
        assert mod_inverse(3, 52) == 35
        with pytest.raises(NotInvertibleError):
            mod_inverse(2, 4)

    def test_crt_basis(self):
        total, basis = crt_basis([4, 9, 25])
        assert total == 900
        for i, e in enumerate(basis):
            for j, m in enumerate([4, 9, 25]):
                assert e % m == (1 if i == j else 0)


def brute_root_table(n: int) -> dict[int, set[int]]:
    """Cube roots of every residue mod n, from one pass over r"""
    table: dict[int, set[int]] = {}
    for r in range(n):
        table.setdefault(pow(r, 3, n), set()).add(r)
    return table


class TestCubeRoots:
    def test_prime_power_of_three(self):
        assert cube_roots_mod_prime_power(26, 3, 3) == {8, 17, 26}

    @pytest.mark.parametrize("p", [p for p in prime_table(200) if p != 3])
    def test_root_count_law(self, p):
        table = brute_root_table(p)
        for m in range(1, p):
            roots = cube_roots_mod_prime_power(m, p, 1)
            assert roots == table.get(m, set()), m
            assert len(roots) in (0, gcd(3, p - 1))

    def test_known_sets(self):
        assert cube_roots_mod(1, 676) == {1, 529, 653}
        assert cube_roots_mod(2, 25) == {3}
        assert cube_roots_mod(1, 9) == {1, 4, 7}
        assert 197 in cube_roots_mod(998, 225)
        assert cube_roots_mod(5, 1) == {0}

    def test_non_residue(self):
        assert cube_roots_mod(2, 7) == set()
        assert cube_roots_mod(2, 9) == set()

    def test_not_coprime(self):
        with pytest.raises(NotCoprimeError):
            cube_roots_mod(2, 676)
        with pytest.raises(NotCoprimeError):
            cube_roots_mod_prime_power(13, 13, 2)

    def test_accepts_factorization(self):
        assert cube_roots_mod(1, factorize(26).power(2)) == {1, 529, 653}

    def test_exhaustive_small_moduli(self):
        for n in range(1, 150):
            for m in range(n):
                if gcd(m, n) != 1:
                    continue
                assert cube_roots_mod(m, n) == brute_cube_roots(m, n), (m, n)

    @given(st.integers(min_value=2, max_value=10_000), st.integers(min_value=1))
    @settings(max_examples=200, deadline=None)
    def test_matches_brute(self, n, seed):
        m = seed % n
        assume(gcd(m, n) == 1)
        assert cube_roots_mod(m, n) == brute_cube_roots(m, n)

    @given(st.integers(min_value=2, max_value=5000))
    @settings(max_examples=100, deadline=None)
    def test_root_count_unit(self, n):
        count = len(cube_roots_mod(1, n))
        expected = prod(
            (3 if e >= 2 else 1) if p == 3 else (3 if p % 3 == 1 else 1) for p, e in factorize(n)
        )
        assert count == expected

    @pytest.mark.slow
    def test_all_moduli_to_ten_thousand(self):
        for n in range(2, 10_001):
            table = brute_root_table(n)
            factored = factorize(n)
            for m in range(1, n):
                if gcd(m, n) == 1:
                    assert cube_roots_mod(m, factored) == table.get(m, set()), (m, n)
