"""Unimodal permutations, U-D words and bounds on matching permutations."""
from permgraph.orders import (
    admissible_count,
    dyck_left_factor_count,
    enumerate_unimodal,
    mn_upper_bounds,
    ud_decode,
    ud_encode,
)

word = "UUDDDUUDUDDUU"
pi = ud_decode(word)
print(word, "->", pi, "->", ud_encode(pi))

print("unimodal permutations of [4]:", ["".join(map(str, p)) for p in enumerate_unimodal(4)])
print("admissible counts:", [admissible_count(L) for L in range(10)])
print("Dyck left factors:", [dyck_left_factor_count(L) for L in range(10)])

print(f"{'n':>3} {'mode_sum':>9} {'admissible':>11} {'dyck':>8} {'2^(n-1)':>8}")
for n in range(1, 13):
    b = mn_upper_bounds(n)
    print(f"{n:>3} {b['mode_sum']:>9} {b['admissible']:>11} {b['dyck']:>8} {2 ** (n - 1):>8}")
