"""
The row sweep at a large prime
==============================

The triangle for p = 10007 holds about 5 * 10^7 integers of up to 7000 bits,
far too much to keep.  The sweep only needs the previous row, so the norm
can be evaluated row by row.
"""

import time

from cyclonorm import lucas_number
from cyclonorm.norm_poly import evaluate_streaming

for p in (101, 1009, 10007):
    t0 = time.perf_counter()
    value = evaluate_streaming(p, (1, 2), 1, 1, -1)
    print(f"p={p:5d}  {time.perf_counter() - t0:6.2f} s  "
          f"equals L_p: {value == lucas_number(p)}  ({value.bit_length()} bits)")
