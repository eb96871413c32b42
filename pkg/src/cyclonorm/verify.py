"""Invariant suites run by ``cyclonorm verify``.

Each suite walks primes up to ``p_max`` and returns a :class:`SuiteResult`
with the number of individual checks and a list of failure messages.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .core_arith import binomial, is_prime, lucas_number
from .counting_oracles import (
    delta_table_from_census,
    domino_placement_counts,
    subset_pair_census,
)
from .norm_poly import assemble, evaluate, evaluate_terms
from .triangle import (
    binomial_identity_check,
    build_triangle,
    sigma_ppm_via_dominoes,
    source_force_12,
    symmetric_poly_coefficient,
)

__all__ = ["SuiteResult", "SUITES", "SUITE_LIMITS", "run_suite", "pairs"]


@dataclass
class SuiteResult:
    name: str
    p_max: int
    checks: int = 0
    primes: list[int] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, message: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(message)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{self.name}: {status} ({self.checks} checks over {len(self.primes)} values of p"
            f" up to {self.p_max}, {len(self.failures)} failures)"
        )


def primes_between(lo: int, hi: int) -> list[int]:
    return [q for q in range(lo, hi + 1) if is_prime(q)]


def pairs(p: int) -> list[tuple[int, int]]:
    """Every ordered pair of distinct nonzero residues."""
    return [(a, b) for a in range(1, p) for b in range(1, p) if a != b]


def lucas_suite(p_max: int) -> SuiteResult:
    res = SuiteResult("lucas", p_max)
    for p in primes_between(5, p_max):
        res.primes.append(p)
        got = evaluate(assemble(build_triangle(p, (1, 2))), 1, 1, -1)
        res.check(got == lucas_number(p), f"p={p}: N(1,1,-1)={got} != L_p={lucas_number(p)}")
    return res


def pascal_suite(p_max: int) -> SuiteResult:
    res = SuiteResult("pascal", p_max)
    for p in primes_between(3, p_max):
        res.primes.append(p)
        for pair in pairs(p):
            t = build_triangle(p, pair)
            for n1, n2 in t.points():
                f = t.force(n1, n2)
                if n1 == n2 == 0:
                    res.check(f == 1, f"p={p} {pair}: origin force {f} != 1")
                elif t.is_source(n1, n2):
                    res.check(f % p == 0, f"p={p} {pair} ({n1},{n2}): source force {f} not = 0 mod p")
                else:
                    res.check(f == 0, f"p={p} {pair} ({n1},{n2}): force {f} off a source")
    return res


def oracle_suite(p_max: int) -> SuiteResult:
    res = SuiteResult("oracle", p_max)
    for p in primes_between(3, p_max):
        res.primes.append(p)
        census = subset_pair_census(p)
        for pair in pairs(p):
            t = build_triangle(p, pair)
            table = delta_table_from_census(census, *pair)
            for (n1, n2), want in table.items():
                got = t.delta(n1, n2)
                res.check(got == want, f"p={p} {pair} ({n1},{n2}): triangle {got} != oracle {want}")
    return res


def dominoes_suite(p_max: int) -> SuiteResult:
    res = SuiteResult("dominoes", p_max)
    for p in primes_between(5, p_max):
        res.primes.append(p)
        t = build_triangle(p, (1, 2))
        counts = domino_placement_counts(p) if p <= 30 else None
        for k in range(1, (p - 1) // 2 + 1):
            f = t.force(p - 2 * k, k)
            res.check(f == source_force_12(p, k), f"p={p} k={k}: force {f} != closed form")
            if counts is not None:
                res.check(abs(f) == counts[k], f"p={p} k={k}: |force| {abs(f)} != {counts[k]} placements")
    return res


def binomial_suite(p_max: int) -> SuiteResult:
    res = SuiteResult("binomial", p_max)
    for p in range(5, p_max + 1):
        if p % 6 in (1, 5):
            res.primes.append(p)
            res.check(binomial_identity_check(p), f"p={p}: alternating domino sum is nonzero")
    return res


def symmetric_suite(p_max: int) -> SuiteResult:
    res = SuiteResult("symmetric", p_max)
    for p in primes_between(5, p_max):
        res.primes.append(p)
        t = build_triangle(p, (1, 2))
        for delta in range(p - 1):
            s = sigma_ppm_via_dominoes(p, delta)
            res.check(s > 0, f"p={p} delta={delta}: sigma={s} not positive")
            res.check(
                (s - binomial(p - 1, delta)) % p == 0,
                f"p={p} delta={delta}: sigma={s} not = C(p-1, delta) mod p",
            )
            direct = evaluate_terms(symmetric_poly_coefficient(t, delta), 1, 1, -1)
            res.check(direct == s, f"p={p} delta={delta}: triangle gives {direct}, dominoes {s}")
    return res


SUITES: dict[str, Callable[[int], SuiteResult]] = {
    "lucas": lucas_suite,
    "pascal": pascal_suite,
    "oracle": oracle_suite,
    "dominoes": dominoes_suite,
    "binomial": binomial_suite,
    "symmetric": symmetric_suite,
}

# Largest p_max each suite accepts; the oracle enumerates 3^(p-1) labellings.
SUITE_LIMITS = {
    "lucas": 2000,
    "pascal": 61,
    "oracle": 17,
    "dominoes": 500,
    "binomial": 5000,
    "symmetric": 200,
}


def run_suite(name: str, p_max: int) -> SuiteResult:
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    if p_max > SUITE_LIMITS[name]:
        raise ValueError(f"p_max = {p_max} exceeds the {name} suite limit {SUITE_LIMITS[name]}")
    return suite(p_max)
