"""Exact winner tables for the P_3 game (Star(2)) on tiny boards.

The monotone threshold should be C(n,2) - floor(n/2) - 1.  The strict game
is also scanned for bias values where Avoider wins and then loses again.
"""
import math

from aegame.oracle import strict_nonmonotonicity_scan, winner_table

for n in (4, 5):
    m = math.comb(n, 2)
    mon = winner_table(n, 2, "monotone", "star", range(1, m + 1))
    strict = winner_table(n, 2, "strict", "star", range(1, m + 1))
    print(f"n={n} monotone {mon.sequence()} f_mon={mon.thresholds.get('f_mon')} "
          f"(closed form {m - n // 2 - 1})")
    print(f"n={n} strict   {strict.sequence()} {strict.thresholds}")

scan = strict_nonmonotonicity_scan(5, 2, "star", range(1, 11))
print("strict n=5 flagged biases:", scan.flagged or "none")
