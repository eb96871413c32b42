"""Brute-force reference counts over F_p^x.

These are exponential-time on purpose: each one enumerates the objects it
counts, so it shares no code path with the triangle recurrence it is used
to check.  Every enumeration refuses to start when its size exceeds a budget
(``CYCLONORM_BUDGET`` in the environment, default 10**8).
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product

import numpy as np

from .core_arith import binomial, check_prime_modulus, check_residue_pair

__all__ = [
    "BudgetExceeded",
    "CountQuery",
    "default_budget",
    "count_sequences_closed",
    "count_sequences_bruteforce",
    "count_subset_pairs",
    "count_injective_sequences",
    "delta_oracle",
    "subset_pair_census",
    "delta_table_from_census",
    "has_hindrance",
    "force_oracle",
    "signed_count_difference",
    "domino_placements_bruteforce",
    "domino_placements_formula",
]

FORCE_ORACLE_MAX_N = 12


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration would exceed its size budget."""


def default_budget() -> int:
    return int(os.environ.get("CYCLONORM_BUDGET", 10**8))


def _check_budget(size: int, budget: int | None, what: str) -> None:
    limit = default_budget() if budget is None else budget
    if size > limit:
        raise BudgetExceeded(f"{what}: {size} cases exceed the budget {limit}")


@dataclass(frozen=True)
class CountQuery:
    p: int
    i1: int
    i2: int
    n1: int
    n2: int
    target: int = 0

    def __post_init__(self):
        check_prime_modulus(self.p)
        check_residue_pair(self.p, self.i1, self.i2)
        if self.n1 < 0 or self.n2 < 0 or self.n1 + self.n2 > self.p - 1:
            raise ValueError(f"need n1, n2 >= 0 and n1 + n2 <= {self.p - 1}")
        if not 0 <= self.target < self.p:
            raise ValueError(f"target must be a residue in [0, {self.p - 1}]")


def count_sequences_closed(n: int, p: int, target_is_zero: bool) -> int:
    """Number of x in (F_p^x)^n with ``sum k_i x_i`` equal to 0 (or to 1).

    The count does not depend on the nonzero coefficients ``k_i``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    q = (p - 1) ** n
    if target_is_zero:
        num = q + (p - 1) if n % 2 == 0 else q - (p - 1)
    else:
        num = q - 1 if n % 2 == 0 else q + 1
    assert num % p == 0
    return num // p


def count_sequences_bruteforce(
    k_coeffs: list[int], target: int, p: int, budget: int | None = None
) -> int:
    n = len(k_coeffs)
    _check_budget((p - 1) ** n, budget, "sequence enumeration")
    target %= p
    return sum(
        1
        for xs in product(range(1, p), repeat=n)
        if sum(k * x for k, x in zip(k_coeffs, xs)) % p == target
    )


def count_subset_pairs(q: CountQuery, budget: int | None = None) -> int:
    """Disjoint pairs (X1, X2) of subsets of F_p^x, |Xi| = ni, with i1 sum X1 + i2 sum X2 = target."""
    p = q.p
    _check_budget(
        binomial(p - 1, q.n1) * binomial(p - 1 - q.n1, q.n2), budget, "subset-pair enumeration"
    )
    universe = range(1, p)
    count = 0
    for x1 in combinations(universe, q.n1):
        s1 = q.i1 * sum(x1)
        rest = [x for x in universe if x not in x1]
        for x2 in combinations(rest, q.n2):
            if (s1 + q.i2 * sum(x2) - q.target) % p == 0:
                count += 1
    return count


def count_injective_sequences(q: CountQuery, budget: int | None = None) -> int:
    """Sequences of n1 + n2 distinct elements of F_p^x hitting the target."""
    p, n = q.p, q.n1 + q.n2
    _check_budget(math.perm(p - 1, n), budget, "injective-sequence enumeration")
    count = 0
    for xs in permutations(range(1, p), n):
        if (q.i1 * sum(xs[: q.n1]) + q.i2 * sum(xs[q.n1 :]) - q.target) % p == 0:
            count += 1
    return count


def delta_oracle(p: int, i1: int, i2: int, n1: int, n2: int, budget: int | None = None) -> int:
    """Triangle coefficient as (#pairs summing to 0) - (#pairs summing to 1)."""
    a0 = count_subset_pairs(CountQuery(p, i1, i2, n1, n2, 0), budget)
    a1 = count_subset_pairs(CountQuery(p, i1, i2, n1, n2, 1), budget)
    return a0 - a1


def subset_pair_census(p: int, budget: int | None = None) -> np.ndarray:
    """Count every labelling of F_p^x by {unused, X1, X2}.

    Returns ``census[n1, n2, s1, s2]``: the number of disjoint pairs with
    ``|X1| = n1``, ``|X2| = n2``, ``sum X1 = s1`` and ``sum X2 = s2`` (mod p).
    This is the same exhaustive enumeration as :func:`count_subset_pairs`,
    done once for all pairs (i1, i2) and all (n1, n2) at once.
    """
    p = check_prime_modulus(p)
    m = p - 1
    _check_budget(3**m, budget, "subset-pair census")
    labels = np.indices((3,) * m, dtype=np.int8).reshape(m, -1) if m else np.zeros((0, 1), np.int8)
    elems = np.arange(1, p, dtype=np.int64)
    in1 = labels == 1
    in2 = labels == 2
    n1 = in1.sum(axis=0)
    n2 = in2.sum(axis=0)
    s1 = (elems @ in1) % p
    s2 = (elems @ in2) % p
    flat = ((n1 * p + n2) * p + s1) * p + s2
    census = np.bincount(flat, minlength=p**4).reshape(p, p, p, p)
    return census


def delta_table_from_census(census: np.ndarray, i1: int, i2: int) -> dict[tuple[int, int], int]:
    """``{(n1, n2): A_0 - A_1}`` for one residue pair, read off a census."""
    p = census.shape[0]
    s = np.arange(p)
    weights = (i1 * s[:, None] + i2 * s[None, :]) % p
    out = {}
    for n1 in range(p):
        for n2 in range(p - n1):
            c = census[n1, n2]
            out[n1, n2] = int(c[weights == 0].sum()) - int(c[weights == 1].sum())
    return out


def has_hindrance(p: int, i1: int, i2: int, n1: int, n2: int) -> bool:
    """Whether some nonempty sub-multiset of {i1 x n1, i2 x n2} sums to 0 mod p."""
    return any(
        (a * i1 + b * i2) % p == 0
        for a in range(n1 + 1)
        for b in range(n2 + 1)
        if a or b
    )


def _hindrance_weights(p: int, i1: int, i2: int, n1: int, n2: int):
    """Partition sums over hindrance blocks, memoised on the uncovered set.

    ``F(S) = sum over partitions of S into hindrances of prod (|X|-1)! (-p)``,
    enumerated block by block (the block holding the lowest element of ``S``
    is chosen among all submasks of ``S``).
    """
    n = n1 + n2
    coeffs = [i1] * n1 + [i2] * n2
    full = (1 << n) - 1
    block_sum = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        block_sum[mask] = block_sum[mask & (mask - 1)] + coeffs[low]

    @lru_cache(maxsize=None)
    def partitions(mask: int) -> int:
        if mask == 0:
            return 1
        low = mask & -mask
        rest = mask ^ low
        total = 0
        sub = rest
        while True:
            block = sub | low
            if block_sum[block] % p == 0:
                size = block.bit_count()
                total += math.factorial(size - 1) * -p * partitions(mask ^ block)
            if sub == 0:
                break
            sub = (sub - 1) & rest
        return total

    return full, partitions


def _check_force_size(n1: int, n2: int, max_n: int | None) -> None:
    limit = FORCE_ORACLE_MAX_N if max_n is None else max_n
    if n1 + n2 > limit:
        raise BudgetExceeded(f"n1 + n2 = {n1 + n2} exceeds the set-system budget {limit}")


def force_oracle(p: int, i1: int, i2: int, n1: int, n2: int, max_n: int | None = None) -> int:
    """Force at (n1, n2) from the partitions of the index set into hindrances.

    ``n1! n2! f = sum over partitions {X_j} of {1..n1+n2} into hindrances of
    prod (|X_j|-1)! * (-1)^(n-l) * p^l``.  Off sources there is no such
    partition and the force is 0.
    """
    _check_force_size(n1, n2, max_n)
    full, partitions = _hindrance_weights(p, i1, i2, n1, n2)
    n = n1 + n2
    total = partitions(full) * (-1) ** n
    q, r = divmod(total, math.factorial(n1) * math.factorial(n2))
    if r:
        raise ArithmeticError("force sum not divisible by n1! n2!; enumeration is wrong")
    return q


def signed_count_difference(
    p: int, i1: int, i2: int, n1: int, n2: int, max_n: int | None = None
) -> int:
    """``C_0 - C_1`` from collections of disjoint hindrances (partial covers).

    ``sum prod (|X_j|-1)! (-1)^(n-l) p^l (n - sum |X_j|)!``; equals
    ``n1! n2!`` times the triangle coefficient.
    """
    _check_force_size(n1, n2, max_n)
    full, partitions = _hindrance_weights(p, i1, i2, n1, n2)
    n = n1 + n2
    total = 0
    sub = full
    while True:
        total += partitions(sub) * math.factorial(n - sub.bit_count())
        if sub == 0:
            break
        sub = (sub - 1) & full
    return total * (-1) ** n


def _cycle_matchings(length: int):
    """Yield the number of dominoes in each matching of the cycle C_length."""
    # edge e joins positions e and e+1 (mod length); edges 0 and length-1 share position 0
    def walk(e: int, used: int, first_taken: bool):
        if e >= length:
            yield used
            return
        yield from walk(e + 1, used, first_taken)
        if e == length - 1 and first_taken:
            return
        yield from walk(e + 2, used + 1, first_taken or e == 0)

    yield from walk(0, 0, False)


def domino_placements_bruteforce(circle_length: int, k: int, max_length: int = 30) -> int:
    """Placements of k disjoint dominoes on a discrete circle, by enumeration."""
    if circle_length > max_length:
        raise BudgetExceeded(f"circle length {circle_length} exceeds {max_length}")
    if circle_length < 3:
        raise ValueError("circle length must be at least 3")
    return sum(1 for used in _cycle_matchings(circle_length) if used == k)


def domino_placement_counts(circle_length: int, max_length: int = 30) -> list[int]:
    """Placement counts for every k, from one enumeration pass."""
    if circle_length > max_length:
        raise BudgetExceeded(f"circle length {circle_length} exceeds {max_length}")
    counts = [0] * (circle_length // 2 + 1)
    for used in _cycle_matchings(circle_length):
        counts[used] += 1
    return counts


def domino_placements_formula(circle_length: int, k: int) -> int:
    if not 0 <= k <= circle_length // 2:
        raise ValueError(f"k must lie in [0, {circle_length // 2}]")
    if k == 0:
        return 1
    return binomial(circle_length - k, k) + binomial(circle_length - k - 1, k - 1)
