"""The trivariate norm polynomial and its exact and floating-point values."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .core_arith import check_prime_modulus, check_residue_pair
from .triangle import Triangle, build_triangle

__all__ = [
    "NormPolynomial",
    "assemble",
    "evaluate",
    "evaluate_terms",
    "numeric_norm",
    "xi_norm",
    "PrecisionError",
    "evaluate_streaming",
]


class PrecisionError(ArithmeticError):
    """The floating-point product kept a non-negligible imaginary part."""


@dataclass(frozen=True)
class NormPolynomial:
    p: int
    i1: int
    i2: int
    terms: Mapping[tuple[int, int, int], int]

    @property
    def degree(self) -> int:
        return self.p - 1

    def coefficient(self, n0: int, n1: int, n2: int) -> int:
        return self.terms.get((n0, n1, n2), 0)

    def __call__(self, y0: int, y1: int, y2: int) -> int:
        return evaluate(self, y0, y1, y2)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "i1": self.i1,
            "i2": self.i2,
            "terms": [
                {"n0": n0, "n1": n1, "n2": n2, "c": str(c)}
                for (n0, n1, n2), c in sorted(self.terms.items(), key=lambda kv: kv[0][::-1])
            ],
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=indent)

    @classmethod
    def from_dict(cls, data: dict) -> "NormPolynomial":
        terms = {(int(t["n0"]), int(t["n1"]), int(t["n2"])): int(t["c"]) for t in data["terms"]}
        return cls(int(data["p"]), int(data["i1"]), int(data["i2"]), terms)


def assemble(t: Triangle) -> NormPolynomial:
    terms = {(t.p - 1 - n1 - n2, n1, n2): t.delta(n1, n2) for n1, n2 in t.points()}
    return NormPolynomial(t.p, t.i1, t.i2, terms)


def evaluate_terms(terms: Mapping[tuple[int, int, int], int], y0: int, y1: int, y2: int) -> int:
    """Exact value of ``sum c * y0^a y1^b y2^c`` over a term map."""
    total = 0
    for (a, b, c), coeff in terms.items():
        if coeff:
            total += coeff * y0**a * y1**b * y2**c
    return total


def evaluate(n: NormPolynomial, y0: int, y1: int, y2: int) -> int:
    return evaluate_terms(n.terms, y0, y1, y2)


def _pairwise_prod(values: np.ndarray) -> complex:
    while len(values) > 1:
        if len(values) % 2:
            values = np.append(values, 1.0 + 0j)
        values = values[0::2] * values[1::2]
    return complex(values[0]) if len(values) else 1.0 + 0j


def numeric_norm(
    p: int, pair: Sequence[int], y0: float, y1: float, y2: float, tol: float = 1e-6
) -> float:
    """Floating-point ``prod_j (y0 + z^(i1 j) y1 + z^(i2 j) y2)``, z = exp(2 pi i / p)."""
    p = check_prime_modulus(p)
    if p > 200:
        raise ValueError("numeric_norm is limited to p <= 200")
    i1, i2 = check_residue_pair(p, *pair)
    j = np.arange(1, p)
    z1 = np.exp(2j * np.pi * ((i1 * j) % p) / p)
    z2 = np.exp(2j * np.pi * ((i2 * j) % p) / p)
    prod = _pairwise_prod(y0 + z1 * y1 + z2 * y2)
    if abs(prod.imag) > tol * max(1.0, abs(prod)):
        raise PrecisionError(f"imaginary residue {prod.imag:.3e} for real {prod.real:.6e}")
    return prod.real


def _nonzero_positions(digits: Sequence[int]) -> list[int]:
    return [c for c in range(1, len(digits)) if digits[c]]


def xi_norm(seq, p: int) -> int:
    """Exact norm of ``sum_c t_c z^c`` for a sequence with at most two nonzero digits past t_0.

    ``seq`` is anything with a ``digits`` attribute (``SequenceSpec``) or a
    plain sequence of digit values ``t_0 .. t_{b-1}``.
    """
    p = check_prime_modulus(p)
    digits = list(getattr(seq, "digits", seq))
    if not any(digits):
        return 0
    if digits[0] != 1:
        raise ValueError("t_0 must be 1 unless the sequence is identically zero")
    pos = _nonzero_positions(digits)
    if len(pos) > 2:
        raise ValueError(f"{len(pos)} nonzero digits beyond t_0; at most 2 are supported")
    if not pos:
        return 1
    residues = [c % p for c in pos]
    if 0 in residues:
        raise ValueError("a nonzero digit position is divisible by p; unsupported configuration")
    if len(pos) == 1 or residues[0] == residues[1]:
        i1 = residues[0]
        value = sum(digits[c] for c in pos)
        # any second residue works: its variable is set to 0
        i2 = 1 if i1 != 1 else 2
        poly = assemble(build_triangle(p, (i1, i2)))
        return evaluate(poly, 1, value, 0)
    poly = assemble(build_triangle(p, tuple(residues)))
    return evaluate(poly, 1, digits[pos[0]], digits[pos[1]])


def evaluate_streaming(p: int, pair: Sequence[int], y0: int, y1: int, y2: int) -> int:
    """Exact value of the norm polynomial without materialising the triangle.

    Consumes the rows of the sweep one at a time, so it runs at primes where
    the full coefficient table would not fit in memory.
    """
    from .triangle import iter_signed_rows

    i1, i2 = pair
    total = 0
    w = -y2  # rows carry (-1)^y, so y2 enters with a flipped sign
    for n, z in iter_signed_rows(p, i1, i2):
        scale = y0 ** (p - 1 - n)
        if not scale:
            continue
        if y1 in (-1, 0, 1) and w in (-1, 0, 1):
            if y1 == 0:
                row = z[n] * w**n
            elif w == 0:
                row = z[0] * y1**n
            else:
                # y1^(n-y) w^y = y1^n (w/y1)^y with w/y1 = +-1
                even, odd = sum(z[0::2]), sum(z[1::2])
                row = y1**n * (even + odd if w == y1 else even - odd)
        else:
            row = sum(int(v) * y1 ** (n - y) * w**y for y, v in enumerate(z))
        total += scale * row
    return int(total)
