import math

import pytest
from hypothesis import given, strategies as st

from cyclonorm.core_arith import (
    binomial,
    gap_step,
    gap_table,
    is_generator,
    is_prime,
    iteration_count,
    lucas_number,
    multiplicative_order,
    next_prime,
)


def trial_division(n):
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


@pytest.mark.parametrize("n, expected", [(2, True), (1, False), (11, True), (0, False), (9, False)])
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected


def test_is_prime_matches_trial_division():
    assert [n for n in range(5000) if is_prime(n)] == [n for n in range(5000) if trial_division(n)]


@pytest.mark.parametrize(
    "n, expected",
    [
        (2**61 - 1, True),  # Mersenne prime
        (2**63 - 25, True),
        (3215031751, False),  # strong pseudoprime to bases 2, 3, 5, 7
        (3825123056546413051, False),  # strong pseudoprime to the first nine prime bases
        ((2**31 - 1) * (2**31 + 11), False),
    ],
)
def test_is_prime_large(n, expected):
    assert is_prime(n) is expected


@pytest.mark.parametrize("n, expected", [(10, 11), (8, 11), (2, 3), (0, 2), (1, 2), (13, 17)])
def test_next_prime(n, expected):
    assert next_prime(n) == expected


def test_next_prime_overflow():
    with pytest.raises(OverflowError):
        next_prime(2**63 + 5)


@pytest.mark.parametrize("n, expected", [(10, 0), (8, 2), (1, 0), (0, 1)])
def test_gap_step(n, expected):
    assert gap_step(n) == expected


@pytest.mark.parametrize("n, expected", [(0, 0), (1, 0), (10, 1), (8, 2), (7, 2), (89, 3)])
def test_iteration_count(n, expected):
    assert iteration_count(n) == expected


def test_gap_table_agrees_with_scalar_functions():
    f, r = gap_table(3000)
    assert [int(v) for v in f] == [gap_step(n) for n in range(3001)]
    assert [int(v) for v in r] == [iteration_count(n) for n in range(3001)]


@pytest.mark.parametrize("b, p, expected", [(2, 3, True), (2, 11, True), (1, 5, False), (3, 11, False), (3, 7, True)])
def test_is_generator(b, p, expected):
    assert is_generator(b, p) is expected


def test_is_generator_rejects_zero_residue():
    with pytest.raises(ValueError):
        is_generator(11, 11)


def test_generators_of_small_primes_by_enumeration():
    for p in (5, 7, 11, 13, 17):
        for b in range(1, p):
            powers = {pow(b, k, p) for k in range(1, p)}
            assert is_generator(b, p) == (len(powers) == p - 1)
            assert multiplicative_order(b, p) == min(k for k in range(1, p) if pow(b, k, p) == 1)


@pytest.mark.parametrize("n, k, expected", [(4, 2, 6), (5, -1, 0), (10, 5, 252), (3, 4, 0), (0, 0, 1)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_pascal_recurrence():
    for n in range(1, 201):
        for k in range(1, n):
            assert binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1)


@pytest.mark.parametrize("n, expected", [(0, 2), (1, 1), (11, 199), (7, 29), (53, 119218851371)])
def test_lucas_number(n, expected):
    assert lucas_number(n) == expected


def test_lucas_prime_congruence():
    for p in range(2, 201):
        if trial_division(p):
            assert lucas_number(p) % p == 1


@given(st.integers(min_value=2, max_value=10**6))
def test_gap_step_decreases(n):
    assert 0 <= gap_step(n) < n
