import json

import pytest
from hypothesis import assume, given, strategies as st

from permgraph.counting import alpha, independent_set_sequence
from permgraph.errors import CapExceeded, InputError
from permgraph.joins import Atom, JoinExpr, atom_graph, atom_polynomial, expr_sequence, expr_stats, materialize

atoms = st.lists(st.tuples(st.integers(1, 3), st.integers(1, 4)), min_size=1, max_size=3).map(
    lambda parts: Atom(tuple(parts))
)
exprs = st.lists(st.tuples(atoms, st.integers(0, 2)), max_size=3).map(lambda t: JoinExpr(tuple(t)))


def test_atom_normalization():
    a = Atom(((1, 2), (2, 5), (1, 2)))
    assert a.parts == ((2, 5), (2, 2))
    assert a.vertices == 14 and a.alpha == 4
    assert str(Atom.cliques(3, 2)) == "3K_2"


def test_atom_polynomial_examples():
    assert atom_polynomial(Atom.cliques(2, 2)) == (4, 4)
    assert atom_polynomial(Atom(((1, 3), (1, 2)))) == (5, 6)
    assert atom_polynomial(Atom.cliques(3, 3)) == (9, 27, 27)


def test_join_sums_sequences():
    e = JoinExpr.of(Atom.cliques(2, 2), Atom(((1, 3), (1, 2))))
    assert expr_sequence(e) == (9, 10)
    assert expr_stats(e) == (9, 2)


def test_merge_and_counts():
    a = Atom.cliques(1, 3)
    e = JoinExpr.of(a).add(a, 4).add(Atom.cliques(2, 1), 0)
    assert e.terms == ((a, 5),)
    assert e.atom_count == 5
    assert len(list(e.atoms())) == 5
    with pytest.raises(InputError):
        JoinExpr(((a, -1),))


def test_json_round_trip_and_errors():
    e = JoinExpr.of(Atom.cliques(3, 3)).add(Atom.cliques(2, 3), 9)
    obj = e.to_json()
    assert obj["atoms"][0] == {"parts": [[3, 3]]}
    assert obj["atoms"][1]["count"] == 9
    assert JoinExpr.from_json(json.dumps(obj)) == e
    for bad in ({}, {"atoms": [{"parts": [[0, 2]]}]}, {"atoms": [{"parts": "x"}]}):
        with pytest.raises(InputError):
            JoinExpr.from_json(bad)


@given(atoms)
def test_atom_polynomial_matches_counter(a):
    g = atom_graph(a)
    assert g.n == a.vertices
    assert atom_polynomial(a) == independent_set_sequence(g)


@given(exprs)
def test_symbolic_matches_materialized(e):
    assume(expr_stats(e)[0] <= 40)
    g = materialize(e, cap=40)
    assert expr_sequence(e) == independent_set_sequence(g)
    assert expr_stats(e) == (g.n, alpha(g))


def test_materialize_cap():
    with pytest.raises(CapExceeded):
        materialize(JoinExpr.of(Atom.cliques(3, 3)), cap=8)
