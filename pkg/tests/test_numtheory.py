"""Number-theory layer: factorization, totient, the cyclic-number test."""

import math
import random

import pytest
from hypothesis import given, strategies as st

from cyclicnum import (
    check_conditions,
    cyclic_numbers,
    element_of_order,
    euler_phi,
    ext_gcd,
    factorize,
    gcd,
    is_cyclic_number,
    is_prime,
    mod_pow,
    multiplicative_order,
)
from cyclicnum.numtheory import MAX_INPUT

PRIMES_BELOW_100 = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                    47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]


class TestFactorize:
    def test_one_has_empty_factorization(self):
        f = factorize(1)
        assert f.factors == ()
        assert f.is_squarefree

    def test_small_examples(self):
        assert factorize(12).factors == ((2, 2), (3, 1))
        assert factorize(97).factors == ((97, 1),)
        assert factorize(118).factors == ((2, 1), (59, 1))
        assert factorize(3600).factors == ((2, 4), (3, 2), (5, 2))

    def test_large_prime(self):
        assert factorize(2**31 - 1).factors == ((2**31 - 1, 1),)

    @given(st.integers(min_value=1, max_value=10**6))
    def test_product_reconstructs_input(self, n):
        f = factorize(n)
        prod = 1
        for p, a in f.factors:
            assert is_prime(p)
            assert a >= 1
            prod *= p**a
        assert prod == n

    def test_factors_sorted_and_distinct(self):
        f = factorize(2 * 2 * 3 * 7 * 7 * 7)
        assert f.factors == ((2, 2), (3, 1), (7, 3))
        assert f.primes == (2, 3, 7)
        assert not f.is_squarefree

    @pytest.mark.parametrize("bad", [0, -4, MAX_INPUT + 1])
    def test_rejects_out_of_range(self, bad):
        with pytest.raises(ValueError):
            factorize(bad)

    def test_is_prime_matches_table(self):
        assert [p for p in range(2, 100) if is_prime(p)] == PRIMES_BELOW_100
        assert not is_prime(1)
        assert not is_prime(0)


class TestTotientAndGcd:
    def test_known_values(self):
        assert euler_phi(1) == 1
        assert euler_phi(12) == 4
        assert euler_phi(97) == 96
        assert euler_phi(100) == 40

    def test_phi_equals_coprime_count_up_to_2000(self):
        # independent brute-force oracle for the totient
        for n in range(1, 2001):
            assert euler_phi(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)

    @given(
        st.integers(min_value=1, max_value=10**4),
        st.integers(min_value=1, max_value=10**4),
    )
    def test_phi_multiplicative_on_coprime_pairs(self, a, b):
        if math.gcd(a, b) == 1:
            assert euler_phi(a * b) == euler_phi(a) * euler_phi(b)

    def test_gcd_examples(self):
        assert gcd(12, 8) == 4
        assert gcd(15, 8) == 1
        assert gcd(7, 7) == 7

    def test_gcd_rejects_bad_input(self):
        with pytest.raises(ValueError):
            gcd(0, 0)
        with pytest.raises(ValueError):
            gcd(-4, 6)

    def test_ext_gcd_bezout_identity(self):
        rng = random.Random(20260825)
        for _ in range(1000):
            a = rng.randrange(1, 10**12)
            b = rng.randrange(1, 10**12)
            g, x, y = ext_gcd(a, b)
            assert g == math.gcd(a, b)
            assert a * x + b * y == g


class TestModArith:
    @given(
        st.integers(min_value=0, max_value=10**9),
        st.integers(min_value=0, max_value=10**6),
        st.integers(min_value=2, max_value=10**9),
    )
    def test_mod_pow_matches_builtin(self, base, exp, modulus):
        assert mod_pow(base, exp, modulus) == pow(base, exp, modulus)

    def test_mod_pow_rejects_bad_modulus(self):
        with pytest.raises(ValueError):
            mod_pow(2, 3, 1)
        with pytest.raises(ValueError):
            mod_pow(2, -1, 5)

    def test_multiplicative_order_examples(self):
        assert multiplicative_order(2, 7) == 3
        assert multiplicative_order(3, 7) == 6
        assert multiplicative_order(1, 5) == 1

    def test_multiplicative_order_requires_coprime(self):
        with pytest.raises(ValueError):
            multiplicative_order(6, 9)


class TestElementOfOrder:
    def test_examples(self):
        assert element_of_order(2, 3) == 2
        assert element_of_order(3, 7) == 2
        assert element_of_order(2, 5) == 4
        assert element_of_order(5, 11) == 3
        assert element_of_order(2, 7) == 6

    def test_rejects_non_divisor_or_composite(self):
        with pytest.raises(ValueError):
            element_of_order(3, 5)  # 3 does not divide 4
        with pytest.raises(ValueError):
            element_of_order(4, 5)  # 4 is not prime
        with pytest.raises(ValueError):
            element_of_order(2, 9)  # 9 is not prime

    def test_order_is_exact_and_powers_distinct(self):
        pairs = [(2, 3), (2, 5), (3, 7), (5, 11), (3, 13), (11, 23)]
        for p1, p2 in pairs:
            a = element_of_order(p1, p2)
            assert pow(a, p1, p2) == 1
            powers = {pow(a, k, p2) for k in range(p1)}
            assert len(powers) == p1  # order exactly p1, not a proper divisor


class TestCyclicNumbers:
    def test_known_cyclic_numbers(self):
        for n in (1, 2, 3, 5, 7, 11, 15, 33, 35, 255):
            assert is_cyclic_number(n)

    def test_known_non_cyclic_numbers(self):
        for n in (4, 6, 8, 9, 16, 20, 21, 100):
            assert not is_cyclic_number(n)

    def test_condition_reports(self):
        r = check_conditions(20)
        assert (r.squarefree_ok, r.square_prime) == (False, 2)
        assert (r.arrow_ok, r.arrow_pair) == (False, (2, 5))
        r = check_conditions(21)
        assert (r.squarefree_ok, r.square_prime) == (True, None)
        assert (r.arrow_ok, r.arrow_pair) == (False, (3, 7))
        r = check_conditions(15)
        assert r.squarefree_ok and r.arrow_ok

    def test_square_prime_is_smallest(self):
        assert check_conditions(36).square_prime == 2
        assert check_conditions(45).square_prime == 3

    def test_arrow_pair_is_lexicographically_smallest(self):
        # 42 = 2*3*7 admits (2,3), (2,7) and (3,7); report the least
        assert check_conditions(42).arrow_pair == (2, 3)

    def test_gcd_test_agrees_with_conditions_to_5000(self):
        for n in range(1, 5001):
            r = check_conditions(n)
            assert is_cyclic_number(n) == (r.squarefree_ok and r.arrow_ok), n

    def test_cyclic_numbers_ranges(self):
        assert cyclic_numbers(1, 8) == [1, 2, 3, 5, 7]
        assert cyclic_numbers(14, 16) == [15]
        assert cyclic_numbers(20, 22) == []

    def test_cyclic_numbers_rejects_bad_range(self):
        with pytest.raises(ValueError):
            cyclic_numbers(5, 4)
        with pytest.raises(ValueError):
            cyclic_numbers(0, 4)
