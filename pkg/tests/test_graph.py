from itertools import permutations, product

import pytest
from hypothesis import given

from permgraph.errors import GraphFormatError
from permgraph.graph import (
    Graph,
    complement,
    complete,
    cycle,
    disjoint_union,
    edge_order,
    empty,
    graph_from_mask,
    graph_to_mask,
    mutual_join,
    parse_graph,
    path,
)

from strategies import graphs


def test_parse_path():
    g = parse_graph("3\n0 1\n1 2")
    assert g == path(3)
    assert g.n == 3 and g.m == 2


def test_parse_isolated_and_comments():
    assert parse_graph("4\n") == empty(4)
    g = parse_graph("# header\n5\n\n4 0\n# trailing\n")
    assert g.n == 5 and g.edges == {(0, 4)}


@pytest.mark.parametrize("text", ["2\n0 0", "3\n0 3", "3\n0 1\n1 0", "3\n0 1 2", "x\n", "", "3\n0 a"])
def test_parse_errors(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_text_round_trip():
    g = Graph.from_edges(6, [(5, 0), (2, 3), (1, 4)])
    assert parse_graph(g.to_text()) == g


def test_complement_examples():
    assert complement(complete(3)) == empty(3)
    assert complement(path(3)).edges == {(0, 2)}


def test_complement_of_c5_is_c5():
    c5 = cycle(5)
    comp = complement(c5)
    assert sorted(comp.degree(v) for v in range(5)) == [2] * 5
    # brute-force isomorphism over all 5! relabelings
    assert any(
        all(comp.has_edge(p[u], p[v]) for u, v in c5.edges) and comp.m == c5.m
        for p in permutations(range(5))
    )


def test_disjoint_union_examples():
    g = disjoint_union([complete(2), complete(2)])
    assert g.n == 4 and g.edges == {(0, 1), (2, 3)}
    seed = disjoint_union([complete(6), complete(3), complete(3)])
    assert seed.n == 12 and seed.m == 15 + 3 + 3
    assert disjoint_union([]) == empty(0)


def test_mutual_join_examples():
    assert mutual_join([complete(1), complete(1)]) == complete(2)
    two_k2 = disjoint_union([complete(2), complete(2)])
    j = mutual_join([two_k2, complete(3)])
    assert j.n == 7 and j.m == 17
    assert mutual_join([two_k2]) == two_k2


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g


@given(graphs(max_n=6), graphs(max_n=6))
def test_join_edge_count(g, h):
    assert mutual_join([g, h]).m == g.m + h.m + g.n * h.n


def _all_graphs(n):
    return [graph_from_mask(n, mask) for mask in range(1 << len(edge_order(n)))]


def test_complement_of_join_is_union_of_complements():
    small = [g for n in range(4) for g in _all_graphs(n)]
    for g, h in product(small, repeat=2):
        assert complement(mutual_join([g, h])) == disjoint_union([complement(g), complement(h)])


def test_mask_round_trip():
    for mask in range(1 << 6):
        assert graph_to_mask(graph_from_mask(4, mask)) == mask


def test_graph_rejects_bad_edges():
    with pytest.raises(GraphFormatError):
        Graph(2, frozenset({(1, 0)}))
    with pytest.raises(GraphFormatError):
        Graph.from_edges(3, [(0, 1), (0, 1)])
