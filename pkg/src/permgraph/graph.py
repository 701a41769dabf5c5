"""Explicit simple graphs and the union / join / complement operators.

Vertices are ``0..n-1``.  Adjacency is kept as one int bitmask per vertex,
which is what the counters and the search kernels consume.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import GraphFormatError


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphFormatError(f"negative vertex count {self.n}")
        adj = [0] * self.n
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise GraphFormatError(f"bad edge ({u}, {v}) for n={self.n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "adj", tuple(adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, normalizing pairs to ``u < v``.

        Loops, out-of-range endpoints and repeated edges raise
        :class:`GraphFormatError`.
        """
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 0 or v >= n:
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
            if (u, v) in seen:
                raise GraphFormatError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
        return cls(n, frozenset(seen))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def to_text(self) -> str:
        """Serialize in the graph file format (inverse of :func:`parse_graph`)."""
        lines = [str(self.n)] + [f"{u} {v}" for u, v in self.sorted_edges()]
        return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse the graph file format.

    First non-comment line is the vertex count; each further nonempty line is
    an edge ``u v``.  Lines starting with ``#`` are ignored.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            nums = [int(f) for f in fields]
        except ValueError:
            raise GraphFormatError(f"line {lineno}: not an integer line: {raw!r}") from None
        if n is None:
            if len(nums) != 1 or nums[0] < 0:
                raise GraphFormatError(f"line {lineno}: expected a vertex count, got {raw!r}")
            n = nums[0]
            continue
        if len(nums) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {raw!r}")
        edges.append((nums[0], nums[1]))
    if n is None:
        raise GraphFormatError("missing vertex count header")
    return Graph.from_edges(n, edges)


def complete(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def empty(n: int) -> Graph:
    return Graph(n, frozenset())


def path(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphFormatError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complement(g: Graph) -> Graph:
    return Graph(g.n, frozenset(e for e in combinations(range(g.n), 2) if e not in g.edges))


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    """Vertex-disjoint union; block ``i`` is shifted by the sizes before it."""
    edges = []
    offset = 0
    for g in gs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, frozenset(edges))


def mutual_join(gs: Sequence[Graph]) -> Graph:
    """Disjoint union plus every edge between two different blocks."""
    base = disjoint_union(gs)
    edges = set(base.edges)
    starts = []
    offset = 0
    for g in gs:
        starts.append((offset, offset + g.n))
        offset += g.n
    for (a0, a1), (b0, b1) in combinations(starts, 2):
        edges.update((u, v) for u in range(a0, a1) for v in range(b0, b1))
    return Graph(offset, frozenset(edges))


def graph_from_mask(n: int, mask: int) -> Graph:
    """Decode an edge bitmask; bit ``i`` is the i-th pair in :func:`edge_order`."""
    pairs = edge_order(n)
    return Graph(n, frozenset(pairs[i] for i in range(len(pairs)) if mask >> i & 1))


def graph_to_mask(g: Graph) -> int:
    index = {e: i for i, e in enumerate(edge_order(g.n))}
    mask = 0
    for e in g.edges:
        mask |= 1 << index[e]
    return mask


def edge_order(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in colex order: (0,1), (0,2), (1,2), (0,3), ...

    Colex keeps the pairs among the first ``j`` vertices as a prefix, so the
    edge mask of a graph on ``j`` vertices is unchanged when isolated
    vertices are appended.
    """
    return [(u, v) for v in range(n) for u in range(v)]
