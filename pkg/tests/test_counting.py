from math import comb

import pytest
from hypothesis import given, settings

from permgraph.counting import (
    alpha,
    binomial_row,
    clique_counts,
    independent_set_sequence,
    matching_sequence,
    nu,
    oracle_independent,
    oracle_matching,
    oracle_sequences,
    sequence_from_json,
    sequence_to_json,
)
from permgraph.errors import CapExceeded, InputError
from permgraph.graph import complement, complete, cycle, disjoint_union, edge_order, empty, graph_from_mask, path

from conftest import random_graph
from strategies import graphs


def k2s(k):
    return disjoint_union([complete(2)] * k)


def test_independent_examples():
    assert independent_set_sequence(empty(4)) == (4, 6, 4, 1)
    for n in range(1, 8):
        assert independent_set_sequence(complete(n)) == (n,)
    assert independent_set_sequence(cycle(5)) == (5, 5)
    assert independent_set_sequence(empty(0)) == ()


def test_matching_examples():
    seq = matching_sequence(k2s(4))
    assert seq == (4, 6, 4, 1)
    assert seq[1] > seq[0]
    assert matching_sequence(complete(2)) == (1,)
    assert matching_sequence(complete(4)) == (6, 3)
    assert matching_sequence(path(3)) == (2,)


def test_oracle_examples():
    assert oracle_sequences(cycle(5)) == ((5, 5), (5, 5))
    assert oracle_sequences(complete(3)) == ((3,), (3,))
    assert oracle_matching(k2s(5)) == (5, 10, 10, 5, 1) == binomial_row(5)
    assert oracle_matching(complete(4)) == (6, 3)


def test_alpha_nu_examples():
    assert alpha(cycle(5)) == 2
    assert alpha(empty(4)) == 4
    assert alpha(disjoint_union([complete(6), complete(3), complete(3)])) == 3
    assert nu(k2s(5)) == 5
    assert nu(complete(4)) == 2
    assert nu(path(4)) == 2


def test_exhaustive_small_graphs_match_oracle():
    for n in range(6):
        for mask in range(1 << len(edge_order(n))):
            g = graph_from_mask(n, mask)
            assert oracle_sequences(g) == (independent_set_sequence(g), matching_sequence(g))


def test_random_graphs_match_oracle(rng):
    for _ in range(400):
        g = random_graph(rng, 14, 20)
        assert oracle_sequences(g) == (independent_set_sequence(g), matching_sequence(g))


@given(graphs(max_n=10))
def test_first_entries(g):
    ind, mat = independent_set_sequence(g), matching_sequence(g)
    assert (ind[:1] or (0,))[0] == g.n
    assert (mat[:1] or (0,))[0] == g.m
    assert all(v > 0 for v in ind + mat)


@given(graphs(max_n=6), graphs(max_n=6))
def test_disjoint_union_convolves(g, h):
    def conv(p, q):
        p, q = (1,) + p, (1,) + q
        out = [0] * (len(p) + len(q) - 1)
        for i, a in enumerate(p):
            for j, b in enumerate(q):
                out[i + j] += a * b
        return tuple(out[1:])

    u = disjoint_union([g, h])
    assert independent_set_sequence(u) == conv(independent_set_sequence(g), independent_set_sequence(h))
    assert matching_sequence(u) == conv(matching_sequence(g), matching_sequence(h))


@settings(max_examples=200)
@given(graphs(max_n=12))
def test_cliques_of_complement(g):
    assert independent_set_sequence(g) == clique_counts(complement(g))


def test_memo_cap_does_not_change_results(rng):
    for _ in range(50):
        g = random_graph(rng, 12)
        assert independent_set_sequence(g, memo_cap=0) == independent_set_sequence(g)
        assert matching_sequence(g, memo_cap=3) == matching_sequence(g)


def test_caps():
    with pytest.raises(CapExceeded):
        independent_set_sequence(empty(65))
    with pytest.raises(CapExceeded):
        matching_sequence(empty(10), cap=9)
    with pytest.raises(CapExceeded):
        oracle_independent(empty(25), limit=1 << 24)
    with pytest.raises(CapExceeded):
        oracle_matching(complete(8), limit=1 << 24)


def test_big_edgeless_is_binomial():
    n = 60
    assert independent_set_sequence(empty(n)) == tuple(comb(n, k) for k in range(1, n + 1))


def test_sequence_json():
    obj = sequence_to_json("independent", (4, 6, 4, 1))
    assert obj == {"kind": "independent", "length": 4, "values": ["4", "6", "4", "1"]}
    assert sequence_from_json(obj) == ("independent", (4, 6, 4, 1))
    huge = (15**15,)
    assert sequence_from_json(sequence_to_json("matching", huge))[1] == huge
    with pytest.raises(InputError):
        sequence_to_json("cliques", ())
