"""Exact integer and modular primitives.

Everything here is a pure function on Python ints; nothing is cached
globally except the small witness tuple used by Miller-Rabin.
"""
from __future__ import annotations

import math

import numpy as np

__all__ = [
    "is_prime",
    "next_prime",
    "gap_step",
    "iteration_count",
    "gap_table",
    "is_generator",
    "multiplicative_order",
    "binomial",
    "lucas_number",
    "check_prime_modulus",
    "check_residue_pair",
]

# Deterministic for every n < 3.3e24, which covers the 64-bit range.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MAX_SUPPORTED = 1 << 63


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for 0 <= n <= 2**63."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than ``n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n < 2:
        return 2
    m = n + 1 if n % 2 == 0 else n + 2
    while m <= _MAX_SUPPORTED:
        if is_prime(m):
            return m
        m += 2
    raise OverflowError(f"next prime after {n} exceeds the supported range 2**63")


def gap_step(n: int) -> int:
    """``next_prime(n) - n - 1``; strictly decreasing for n > 1 (Bertrand)."""
    return next_prime(n) - n - 1


def iteration_count(n: int) -> int:
    """Number of :func:`gap_step` iterations needed to land in {0, 1}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    k = 0
    while n > 1:
        n = gap_step(n)
        k += 1
    return k


def gap_table(n_max: int) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised ``(f, R)`` arrays for 0 <= n <= n_max.

    ``f[n] = gap_step(n)`` and ``R[n] = iteration_count(n)``, computed from a
    sieve up to ``2 * n_max + 2`` so no primality test runs per entry.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    limit = 2 * n_max + 3
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for q in range(2, math.isqrt(limit) + 1):
        if sieve[q]:
            sieve[q * q :: q] = False
    primes = np.flatnonzero(sieve)
    n = np.arange(n_max + 1)
    nxt = primes[np.searchsorted(primes, n, side="right")]
    f = nxt - n - 1
    r = np.zeros(n_max + 1, dtype=np.int64)
    # f[n] < n for n > 1, so an ascending pass sees R[f[n]] already filled.
    for m in range(2, n_max + 1):
        r[m] = r[f[m]] + 1
    return f, r


def multiplicative_order(b: int, p: int) -> int:
    b %= p
    if b == 0:
        raise ValueError(f"{b} is not invertible mod {p}")
    k, x = 1, b
    while x != 1:
        x = x * b % p
        k += 1
    return k


def is_generator(b: int, p: int) -> bool:
    """True iff ``b`` generates the multiplicative group mod the prime ``p``."""
    if b % p == 0:
        raise ValueError(f"b = {b} is divisible by p = {p}")
    return multiplicative_order(b, p) == p - 1


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with the convention 0 outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def lucas_number(n: int) -> int:
    """n-th Lucas number (L0 = 2, L1 = 1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def check_prime_modulus(p: int) -> int:
    if not isinstance(p, (int, np.integer)) or p < 3 or not is_prime(int(p)):
        raise ValueError(f"{p} is not an odd prime")
    return int(p)


def check_residue_pair(p: int, i1: int, i2: int) -> tuple[int, int]:
    if not (1 <= i1 <= p - 1 and 1 <= i2 <= p - 1):
        raise ValueError(f"residues must lie in [1, {p - 1}], got ({i1}, {i2})")
    if i1 == i2:
        raise ValueError(f"residues must be distinct, got i1 = i2 = {i1}")
    return int(i1), int(i2)
