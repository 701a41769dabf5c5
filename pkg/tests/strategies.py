from itertools import combinations

from hypothesis import strategies as st

from permgraph.graph import Graph


@st.composite
def graphs(draw, max_n=8, max_edges=None):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_edges)) if pairs else []
    return Graph.from_edges(n, chosen)
