"""Strongly b-multiplicative sequences and their p-rarefied partial sums."""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .core_arith import check_prime_modulus, is_generator
from .norm_poly import xi_norm

__all__ = [
    "SequenceSpec",
    "THUE_MORSE",
    "term",
    "terms",
    "partial_sum_direct",
    "partial_sum_digits",
    "rarefied_sum",
    "rarefied_sum_direct",
    "rarefied_sums_at",
    "twisted_norm_sum",
    "ExponentVerdict",
    "theoretical_exponent",
    "EmpiricalFit",
    "empirical_exponent",
    "RarefactionReport",
    "rarefaction_report",
]

DIRECT_BUDGET = 10**8


@dataclass(frozen=True)
class SequenceSpec:
    """Digit values ``t_0 .. t_{b-1}`` of a strongly b-multiplicative sequence."""

    b: int
    digits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(int(t) for t in self.digits))
        if self.b < 2:
            raise ValueError("base must be at least 2")
        if len(self.digits) != self.b:
            raise ValueError(f"expected {self.b} digit values, got {len(self.digits)}")
        if any(abs(t) > 1 for t in self.digits):
            raise ValueError("digit values must lie in {-1, 0, 1}")
        if self.digits[0] != 1 and any(self.digits):
            raise ValueError("t_0 must be 1 unless the sequence is identically zero")

    @classmethod
    def from_tail(cls, b: int, tail: Sequence[int]) -> "SequenceSpec":
        """Build from ``t_1 .. t_{b-1}`` with ``t_0 = 1``."""
        return cls(b, (1, *tail))

    @property
    def is_zero(self) -> bool:
        return not any(self.digits)

    @property
    def d(self) -> int:
        """Number of nonzero digit values among t_1 .. t_{b-1}."""
        return sum(1 for t in self.digits[1:] if t)

    @property
    def digit_sum(self) -> int:
        return sum(self.digits)

    def prefix_sum(self, c: int) -> int:
        """``sum_{c' < c} t_c'``."""
        return sum(self.digits[:c])


THUE_MORSE = SequenceSpec(2, (1, -1))


def term(seq: SequenceSpec, n: int) -> int:
    """``t_n``: product of the digit values over the base-b expansion of n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if seq.is_zero:
        return 0
    t = 1
    while n and t:
        n, c = divmod(n, seq.b)
        t *= seq.digits[c]
    return t


def terms(seq: SequenceSpec, n: np.ndarray) -> np.ndarray:
    """Vectorised :func:`term` over an integer array."""
    n = np.asarray(n, dtype=np.int64).copy()
    if seq.is_zero:
        return np.zeros(n.shape, dtype=np.int64)
    table = np.asarray(seq.digits, dtype=np.int64)
    out = np.ones(n.shape, dtype=np.int64)
    while n.any():
        out *= table[n % seq.b]
        n //= seq.b
    return out


def _check_direct(N: int, budget: int | None) -> None:
    limit = DIRECT_BUDGET if budget is None else budget
    if N > limit:
        raise ValueError(f"N = {N} exceeds the direct-summation budget {limit}")


def partial_sum_direct(seq: SequenceSpec, N: int, budget: int | None = None) -> int:
    """``sum_{n < N} t_n`` by iteration."""
    _check_direct(N, budget)
    total = 0
    for start in range(0, N, 1 << 20):
        stop = min(N, start + (1 << 20))
        total += int(terms(seq, np.arange(start, stop)).sum())
    return total


def partial_sum_digits(seq: SequenceSpec, N: int) -> int:
    """``sum_{n < N} t_n`` from the base-b digits of N in O(b log N) steps.

    For ``N = sum c_i b^i`` the sum splits into digit blocks:
    ``sum_i (prod_{k > i} t_{c_k}) * psi(c_i) * psi(b)^i``.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    b = seq.b
    psi = [seq.prefix_sum(c) for c in range(b + 1)]
    digits = []
    while N:
        N, c = divmod(N, b)
        digits.append(c)
    total, lead = 0, 1
    for i in range(len(digits) - 1, -1, -1):
        c = digits[i]
        total += lead * psi[c] * psi[b] ** i
        lead *= seq.digits[c]
        if not lead:
            break
    return total


def _residue_block_sums(seq: SequenceSpec, p: int, length: int) -> list[list[int]]:
    """``W[i][s] = sum_{r < b^i, r = s mod p} t_r`` for i = 0..length."""
    b = seq.b
    w = [[0] * p]
    w[0][0] = 1
    scale = 1  # b^i mod p
    for _ in range(length):
        prev = w[-1]
        cur = [0] * p
        for c, tc in enumerate(seq.digits):
            if not tc:
                continue
            shift = c * scale % p
            for s, v in enumerate(prev):
                if v:
                    cur[(s + shift) % p] += tc * v
        w.append(cur)
        scale = scale * b % p
    return w


def rarefied_sum(seq: SequenceSpec, p: int, N: int) -> int:
    """``sum_{n < N, p | n} t_n`` by a digit recursion on residues mod p."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    if seq.is_zero or N == 0:
        return 0
    b = seq.b
    digits = []
    m = N
    while m:
        m, c = divmod(m, b)
        digits.append(c)
    w = _residue_block_sums(seq, p, len(digits))
    total, lead, prefix = 0, 1, 0  # prefix = value of the leading digits, mod p
    for i in range(len(digits) - 1, -1, -1):
        scale = pow(b, i, p)
        for c in range(digits[i]):
            tc = seq.digits[c]
            if tc:
                offset = (prefix * b + c) * scale % p
                total += lead * tc * w[i][(-offset) % p]
        lead *= seq.digits[digits[i]]
        if not lead:
            break
        prefix = (prefix * b + digits[i]) % p
    return total


def rarefied_sum_direct(seq: SequenceSpec, p: int, N: int, budget: int | None = None) -> int:
    """Same quantity as :func:`rarefied_sum`, summing ``t_{kp}`` for ``kp < N``."""
    _check_direct(N, budget)
    count = -(-N // p)
    total = 0
    for start in range(0, count, 1 << 20):
        stop = min(count, start + (1 << 20))
        total += int(terms(seq, np.arange(start, stop, dtype=np.int64) * p).sum())
    return total


def rarefied_sums_at(seq: SequenceSpec, p: int, checkpoints: Sequence[int]) -> list[int]:
    return [rarefied_sum(seq, p, N) for N in checkpoints]


def twisted_norm_sum(seq: SequenceSpec, p: int) -> complex:
    """Floating-point ``sum_{n < b^(p-1)} z^n t_n`` with z = exp(2 pi i / p)."""
    p = check_prime_modulus(p)
    size = seq.b ** (p - 1)
    if size > 10**7:
        raise ValueError(f"b^(p-1) = {size} terms is too many")
    n = np.arange(size, dtype=np.int64)
    t = terms(seq, n)
    return complex(np.sum(t * np.exp(2j * np.pi * (n % p) / p)))


@dataclass(frozen=True)
class ExponentVerdict:
    norm: int
    generator: bool
    condition_holds: bool
    exponent: float | None


def theoretical_exponent(seq: SequenceSpec, p: int) -> ExponentVerdict:
    """Growth exponent ``log(xi) / ((p-1) log b)`` of the p-rarefied sums.

    ``exponent`` is ``None`` unless b generates (Z/p)^x and the norm strictly
    dominates ``max((sum t_c)^(p-1), 1)``; the verdict is always reported.
    """
    p = check_prime_modulus(p)
    if seq.d > 2:
        raise ValueError(f"d = {seq.d}: at most two nonzero digits beyond t_0 are supported")
    xi = xi_norm(seq, p)
    gen = seq.b % p != 0 and is_generator(seq.b, p)
    cond = abs(xi) > max(seq.digit_sum ** (p - 1), 1)
    exponent = math.log(xi) / ((p - 1) * math.log(seq.b)) if gen and cond else None
    return ExponentVerdict(xi, gen, cond, exponent)


@dataclass(frozen=True)
class EmpiricalFit:
    slope: float
    checkpoints: tuple[tuple[int, int], ...]
    used: int
    discarded: int


def _geometric_checkpoints(b: int, n_max: int) -> list[int]:
    out, N = [], b
    while N <= n_max:
        out.append(N)
        N *= b
    return out


def empirical_exponent(seq: SequenceSpec, p: int, n_max: int) -> EmpiricalFit:
    """Least-squares slope of ``log|S(N)|`` against ``log N`` at ``N = b^k <= n_max``.

    Checkpoints with ``S(N) = 0`` are dropped; at least three must remain.
    """
    if n_max > DIRECT_BUDGET:
        raise ValueError(f"n_max = {n_max} exceeds {DIRECT_BUDGET}")
    cps = _geometric_checkpoints(seq.b, n_max)
    sums = rarefied_sums_at(seq, p, cps)
    pts = [(N, S) for N, S in zip(cps, sums) if S]
    if len(pts) < 3:
        raise ValueError(f"only {len(pts)} checkpoints with a nonzero sum; need 3")
    x = np.log([N for N, _ in pts])
    y = np.log([abs(S) for _, S in pts])
    slope = float(np.polyfit(x, y, 1)[0])
    return EmpiricalFit(slope, tuple(zip(cps, sums)), len(pts), len(cps) - len(pts))


@dataclass(frozen=True)
class RarefactionReport:
    seq: SequenceSpec
    p: int
    n_max: int
    verdict: ExponentVerdict
    fit: EmpiricalFit | None
    checkpoints: tuple[tuple[int, int], ...]
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def theoretical_exponent(self) -> float | None:
        return self.verdict.exponent

    @property
    def empirical_exponent(self) -> float | None:
        return None if self.fit is None else self.fit.slope

    @property
    def condition_holds(self) -> bool:
        return self.verdict.condition_holds

    def to_dict(self) -> dict:
        return {
            "b": self.seq.b,
            "digits": list(self.seq.digits),
            "p": self.p,
            "n_max": self.n_max,
            "norm": str(self.verdict.norm),
            "generator": self.verdict.generator,
            "condition_holds": self.verdict.condition_holds,
            "theoretical_exponent": _fmt(self.theoretical_exponent),
            "empirical_exponent": _fmt(self.empirical_exponent),
            "checkpoints_used": None if self.fit is None else self.fit.used,
            "checkpoints_discarded": None if self.fit is None else self.fit.discarded,
            "checkpoints": [{"N": N, "S": str(S)} for N, S in self.checkpoints],
            "notes": list(self.notes),
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=indent)

    def checkpoints_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["N", "S"])
        w.writerows(self.checkpoints)
        return buf.getvalue()


def _fmt(x: float | None) -> float | None:
    # fixed precision keeps the JSON byte-stable across platforms
    return None if x is None else float(f"{x:.12g}")


def rarefaction_report(seq: SequenceSpec, p: int, n_max: int) -> RarefactionReport:
    verdict = theoretical_exponent(seq, p)
    notes = []
    if not verdict.generator:
        notes.append(f"b = {seq.b} does not generate (Z/{p})^x; no theoretical exponent")
    if not verdict.condition_holds:
        notes.append("norm does not dominate max((sum t_c)^(p-1), 1); no theoretical exponent")
    try:
        fit = empirical_exponent(seq, p, n_max)
        cps = fit.checkpoints
    except ValueError as exc:
        fit = None
        cps_n = _geometric_checkpoints(seq.b, n_max)
        cps = tuple(zip(cps_n, rarefied_sums_at(seq, p, cps_n)))
        notes.append(f"no empirical exponent: {exc}")
    return RarefactionReport(seq, p, n_max, verdict, fit, tuple(cps), tuple(notes))
