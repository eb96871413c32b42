"""
Sums of the Thue-Morse sequence over multiples of p
===================================================

Sums of t_n over n < N with p | n grow like N^a with
a = log(xi) / ((p - 1) log 2), where xi is the norm of 1 - z.
"""

import math

from cyclonorm.rarefaction import (
    THUE_MORSE,
    SequenceSpec,
    empirical_exponent,
    rarefied_sum,
    theoretical_exponent,
)

for p in (3, 5, 11, 13):
    v = theoretical_exponent(THUE_MORSE, p)
    fit = empirical_exponent(THUE_MORSE, p, 2**24)
    print(f"p={p:2d}  xi={v.norm}  theory={v.exponent:.4f}  fit={fit.slope:.4f}"
          f"  ({fit.discarded} zero checkpoints dropped)")

# the digit recursion reaches far beyond direct summation
print(rarefied_sum(THUE_MORSE, 3, 4**40) == 2 * 3**39)

# a ternary sequence: 3 generates (Z/7)^x, so the exponent exists at p = 7
seq = SequenceSpec(3, (1, 1, -1))
v = theoretical_exponent(seq, 7)
print(v.norm, v.exponent, math.log(29) / (6 * math.log(3)))
