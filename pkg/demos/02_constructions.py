"""Join-of-cliques graphs with prescribed independent-set sequences.

All of these are evaluated symbolically, so graphs with millions of
vertices cost nothing to check.
"""
from permgraph import build_gm, build_gpi, build_hk, build_hw, expr_sequence, expr_stats
from permgraph.orders import WeakOrder

for m in range(1, 7):
    e = build_gm(m)
    print(f"G_{m}: {expr_stats(e)[0]} vertices, sequence {expr_sequence(e)}")

print()
for k in (1, 2, 3):
    e = build_hk(3, k)
    print(f"H_{k} (m=3): {expr_sequence(e)}")

print()
for text in ("1,2,3", "2|1,3", "3|2|1"):
    e = build_hw(3, WeakOrder.parse(text))
    v, _ = expr_stats(e)
    print(f"order {text:6s} -> {expr_sequence(e)}  ({v} vertices)")

print()
for pi in [(2, 1), (3, 1, 2), (5, 3, 1, 4, 2)]:
    e, t = build_gpi(pi)
    seq = expr_sequence(e)
    chain = " < ".join(str(seq[p - 1]) for p in pi)
    print(f"pi={pi}: T={t}, {chain}")
