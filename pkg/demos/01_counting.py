"""Exact independent-set and matching sequences, checked three ways."""
from permgraph import complement, cycle, disjoint_union, complete, path
from permgraph.counting import clique_counts, independent_set_sequence, matching_sequence, oracle_sequences

graphs = {
    "C5": cycle(5),
    "4K2": disjoint_union([complete(2)] * 4),
    "P6": path(6),
    "K4": complete(4),
}

for name, g in graphs.items():
    ind = independent_set_sequence(g)
    mat = matching_sequence(g)
    # a second route: cliques of the complement are independent sets of g
    assert clique_counts(complement(g)) == ind
    # a third: test every vertex subset and every edge subset
    assert oracle_sequences(g) == (ind, mat)
    print(f"{name:4s} independent {ind}  matching {mat}")

# 4K2 has more matchings of size 2 than of size 1
print("m_2 > m_1 for 4K2:", matching_sequence(graphs["4K2"])[1] > graphs["4K2"].m)
