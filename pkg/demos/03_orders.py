"""Permutations and weak orders attached to a sequence."""
from math import comb

from permgraph.orders import associated_count, enumerate_associated, format_permutation, induced_weak_order

for seq in [(4, 6, 4, 1), (5, 10, 10, 5, 1)]:
    perms = ["".join(map(str, p)) for p in enumerate_associated(seq)]
    print(f"{seq}: weak order {induced_weak_order(seq)}, permutations {perms}")

# ties in the binomial row give 2^floor((n-1)/2) associated permutations
for n in range(1, 9):
    row = tuple(comb(n, k) for k in range(1, n + 1))
    print(n, associated_count(row), format_permutation(next(iter(enumerate_associated(row)))))
