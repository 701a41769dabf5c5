"""Exact independent-set and matching sequences.

Two unrelated routes are provided:

* memoized vertex-branching recursions (the main path), and
* exhaustive subset enumeration (the oracle), vectorized with numpy as a
  meet-in-the-middle split but still visiting every subset.

Sequences are tuples of Python ints indexed from size 1; the implicit
size-0 count of 1 is never stored.
"""
from __future__ import annotations

import json
from math import comb

import numpy as np

from .errors import CapExceeded, InputError
from .graph import Graph

RECURSION_CAP = 64
MEMO_CAP = 1 << 20
ORACLE_LIMIT = 1 << 28


def _poly_add(p: list[int], q: list[int]) -> list[int]:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return out


def _shift_add(p: list[int], q: list[int]) -> list[int]:
    """Return p + x*q."""
    out = list(p) + [0] * max(0, len(q) + 1 - len(p))
    for i, c in enumerate(q):
        out[i + 1] += c
    return out


def _check_cap(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise CapExceeded(f"graph has {g.n} vertices, recursion cap is {cap}")


def independence_polynomial(g: Graph, cap: int = RECURSION_CAP, memo_cap: int = MEMO_CAP) -> list[int]:
    """Full coefficient list ``[1, i_1, i_2, ...]`` of the independence polynomial.

    Branches on the lowest remaining vertex v:
    ``I(S) = I(S - v) + x * I(S - N[v])``, memoized on the remaining set.
    """
    _check_cap(g, cap)
    adj = g.adj
    memo: dict[int, list[int]] = {0: [1]}

    def rec(s: int) -> list[int]:
        hit = memo.get(s)
        if hit is not None:
            return hit
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        nb = adj[v] & rest
        if nb == 0:
            # v is isolated in S: factor (1 + x)
            sub = rec(rest)
            res = _shift_add(sub, sub)
        else:
            res = _shift_add(rec(rest), rec(rest & ~nb))
        if len(memo) < memo_cap:
            memo[s] = res
        return res

    return rec((1 << g.n) - 1)


def independent_set_sequence(g: Graph, cap: int = RECURSION_CAP, memo_cap: int = MEMO_CAP) -> tuple[int, ...]:
    return tuple(independence_polynomial(g, cap, memo_cap)[1:])


def matching_polynomial(g: Graph, cap: int = RECURSION_CAP, memo_cap: int = MEMO_CAP) -> list[int]:
    """Full coefficient list ``[1, m_1, m_2, ...]`` of the matching generating polynomial.

    For the lowest vertex u with a neighbour left: every matching either
    misses u or uses exactly one edge uv, so
    ``M(S) = M(S - u) + x * sum_v M(S - u - v)``.
    """
    _check_cap(g, cap)
    adj = g.adj
    memo: dict[int, list[int]] = {}

    def rec(s: int) -> list[int]:
        hit = memo.get(s)
        if hit is not None:
            return hit
        # drop vertices with no neighbour inside s
        t = s
        while t:
            low = t & -t
            u = low.bit_length() - 1
            if adj[u] & s:
                break
            t ^= low
        if t == 0:
            return [1]
        s = t  # vertices below u are isolated in s
        s2 = s ^ low
        res = rec(s2)
        nb = adj[u] & s2
        acc: list[int] = []
        while nb:
            bit = nb & -nb
            acc = _poly_add(acc, rec(s2 ^ bit))
            nb ^= bit
        res = _shift_add(res, acc)
        if len(memo) < memo_cap:
            memo[s] = res
        return res

    return rec((1 << g.n) - 1)


def matching_sequence(g: Graph, cap: int = RECURSION_CAP, memo_cap: int = MEMO_CAP) -> tuple[int, ...]:
    return tuple(matching_polynomial(g, cap, memo_cap)[1:])


def alpha(g: Graph, cap: int = RECURSION_CAP) -> int:
    """Independence number, read off as the length of the sequence."""
    return len(independent_set_sequence(g, cap))


def nu(g: Graph, cap: int = RECURSION_CAP) -> int:
    """Matching number, read off as the length of the sequence."""
    return len(matching_sequence(g, cap))


def clique_counts(g: Graph) -> tuple[int, ...]:
    """Number of cliques of each size >= 1, by listing every clique once.

    Each clique is reached from its smallest vertex by only ever extending
    with larger common neighbours.  Applied to ``complement(g)`` this gives
    the independent-set sequence of ``g`` by a route sharing nothing with
    :func:`independence_polynomial`.
    """
    adj = g.adj
    counts: list[int] = []

    def extend(size: int, cand: int) -> None:
        if len(counts) < size:
            counts.append(0)
        counts[size - 1] += 1
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            extend(size + 1, cand & adj[v])

    for v in range(g.n):
        higher = adj[v] >> (v + 1) << (v + 1)
        extend(1, higher)
    return tuple(counts)


# -- oracle ---------------------------------------------------------------

def _free_subset_counts(conflicts: list[int], limit: int) -> list[int]:
    """Count conflict-free subsets of ``len(conflicts)`` items by size.

    ``conflicts[i]`` is the bitmask of items that cannot share a subset with
    item i.  Every one of the ``2**N`` subsets is tested: subsets are split as
    (low half, high half) pairs, each half tabulated exhaustively, and each
    high half is checked against the full low table.
    """
    n_items = len(conflicts)
    if n_items > 62 or (1 << n_items) > limit:
        raise CapExceeded(f"2^{n_items} subsets exceed oracle limit {limit}")
    a = n_items // 2
    low_mask = (1 << a) - 1

    def tabulate(items: list[int], shift: int):
        """free flag, size and accumulated low-conflict mask for every subset of ``items``."""
        k = len(items)
        free = np.ones(1 << k, dtype=bool)
        size = np.zeros(1 << k, dtype=np.int64)
        own = np.zeros(1 << k, dtype=np.int64)  # members, as item bits of this half
        forb = np.zeros(1 << k, dtype=np.int64)  # low-half items in conflict with a member
        for i, item in enumerate(items):
            half = 1 << i
            c_self = (conflicts[item] >> shift) & ((1 << k) - 1)
            c_low = conflicts[item] & low_mask
            free[half:2 * half] = free[:half] & ((own[:half] & c_self) == 0)
            size[half:2 * half] = size[:half] + 1
            own[half:2 * half] = own[:half] | half
            forb[half:2 * half] = forb[:half] | c_low
        return free, size, own, forb

    free_lo, size_lo, own_lo, _ = tabulate(list(range(a)), 0)
    free_hi, size_hi, _, forb_hi = tabulate(list(range(a, n_items)), a)

    counts = np.zeros(n_items + 1, dtype=np.int64)
    for t in np.flatnonzero(free_hi):
        ok = free_lo & ((own_lo & forb_hi[t]) == 0)
        hist = np.bincount(size_lo[ok], minlength=a + 1)
        s = int(size_hi[t])
        counts[s:s + a + 1] += hist
    out = [int(c) for c in counts]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def oracle_independent(g: Graph, limit: int = ORACLE_LIMIT) -> tuple[int, ...]:
    """Independent-set sequence by testing all ``2**n`` vertex subsets."""
    return tuple(_free_subset_counts(list(g.adj), limit)[1:])


def oracle_matching(g: Graph, limit: int = ORACLE_LIMIT) -> tuple[int, ...]:
    """Matching sequence by testing all ``2**|E|`` edge subsets."""
    edges = g.sorted_edges()
    conflicts = []
    for i, (u, v) in enumerate(edges):
        c = 0
        for j, (x, y) in enumerate(edges):
            if j != i and (x in (u, v) or y in (u, v)):
                c |= 1 << j
        conflicts.append(c)
    return tuple(_free_subset_counts(conflicts, limit)[1:])


def oracle_sequences(g: Graph, limit: int = ORACLE_LIMIT) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return oracle_independent(g, limit), oracle_matching(g, limit)


def binomial_row(n: int) -> tuple[int, ...]:
    return tuple(comb(n, k) for k in range(1, n + 1))


def sequence_to_json(kind: str, seq: tuple[int, ...]) -> dict:
    if kind not in ("independent", "matching"):
        raise InputError(f"unknown sequence kind {kind!r}")
    return {"kind": kind, "length": len(seq), "values": [str(v) for v in seq]}


def sequence_from_json(obj: dict | str) -> tuple[str, tuple[int, ...]]:
    if isinstance(obj, str):
        obj = json.loads(obj)
    values = tuple(int(v) for v in obj["values"])
    if obj.get("length", len(values)) != len(values):
        raise InputError("length field does not match values")
    return obj["kind"], values
