"""Exact coefficients of cyclotomic norm polynomials and rarefied digit sums.

The central object is the finite Pascal's triangle of coefficients of
``prod_{j=1}^{p-1} (Y0 + z^(i1 j) Y1 + z^(i2 j) Y2)`` for a primitive p-th
root of unity ``z``; see :mod:`cyclonorm.triangle`.
"""
from .core_arith import (
    binomial,
    gap_step,
    is_generator,
    is_prime,
    iteration_count,
    lucas_number,
    next_prime,
)
from .norm_poly import NormPolynomial, assemble, evaluate, numeric_norm, xi_norm
from .rarefaction import SequenceSpec, THUE_MORSE, rarefaction_report, theoretical_exponent
from .triangle import SourceForce, Triangle, build_triangle, force, source_positions

__version__ = "0.1.0"

__all__ = [
    "NormPolynomial",
    "SequenceSpec",
    "SourceForce",
    "THUE_MORSE",
    "Triangle",
    "assemble",
    "binomial",
    "build_triangle",
    "evaluate",
    "force",
    "gap_step",
    "is_generator",
    "is_prime",
    "iteration_count",
    "lucas_number",
    "next_prime",
    "numeric_norm",
    "rarefaction_report",
    "source_positions",
    "theoretical_exponent",
    "xi_norm",
]
