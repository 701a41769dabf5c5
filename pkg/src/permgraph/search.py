"""Exhaustive small-graph campaigns.

Every campaign splits its input into shards that are scanned independently
(optionally in worker processes) and folded back in shard order, so reports
do not depend on the worker count.

Canonical forms: a graph's code is the adjacency bit string over the colex
pair order (0,1), (0,2), (1,2), (0,3), ...; the canonical code is the
lexicographically smallest code over all relabelings.
"""
from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import comb
from pathlib import Path
from typing import Callable, Iterator, Sequence

import numpy as np

from .counting import independent_set_sequence, matching_sequence
from .errors import InputError
from .graph import Graph, edge_order, graph_from_mask
from .orders import enumerate_associated, format_permutation, is_unimodal_perm, schwenk_check, theorem32_check

LABELED_CAP = 10
CANONICAL_CAP = 8


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("PERMGRAPH_THREADS", "1")))
    except ValueError:
        raise InputError("PERMGRAPH_THREADS must be an integer") from None


@dataclass
class CampaignReport:
    name: str
    params: dict
    examined: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    census: dict | None = None
    stats: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        """Deterministic content first; timing only under ``metadata``."""
        out = {
            "campaign": self.name,
            "params": self.params,
            "examined": self.examined,
            "counterexamples": self.counterexamples,
            "stats": self.stats,
        }
        if self.census is not None:
            out["census"] = self.census
        out["metadata"] = {"wall_time_s": round(self.wall_time, 3)}
        return out


def _map_shards(fn: Callable, shards: Sequence, workers: int | None) -> list:
    workers = default_workers() if workers is None else workers
    if workers <= 1 or len(shards) <= 1:
        return [fn(s) for s in shards]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, shards))


def _chunks(items: Sequence, size: int) -> list:
    return [items[i:i + size] for i in range(0, len(items), size)]


# -- canonical forms --------------------------------------------------------

def graph_code(g: Graph, order: Sequence[int] | None = None) -> int:
    """Adjacency code of g relabeled so that ``order[i]`` becomes vertex i."""
    order = range(g.n) if order is None else order
    code = 0
    for u, v in edge_order(g.n):
        code = code << 1 | g.has_edge(order[u], order[v])
    return code


def code_to_graph(n: int, code: int) -> Graph:
    pairs = edge_order(n)
    top = len(pairs) - 1
    return Graph(n, frozenset(pairs[i] for i in range(len(pairs)) if code >> (top - i) & 1))


def canonical_code_bruteforce(g: Graph) -> int:
    """Minimum code over all ``n!`` relabelings (reference for small n)."""
    return min(graph_code(g, p) for p in permutations(range(g.n)))


def canonical_labeling(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Canonical code and an order achieving it.

    Vertices are placed one position at a time.  The bits added when placing
    position j are exactly the column of pairs (i, j), i < j, so only the
    candidates with the smallest column can lead to the minimum; among
    those, interchangeable twins (equal open or closed neighbourhoods) are
    tried once.  Branches whose prefix already exceeds the best code are cut.
    """
    n = g.n
    adj = g.adj
    total = n * (n - 1) // 2
    best = [None, None]

    def rec(order: list[int], unused: int, prefix: int, bits: int) -> None:
        if best[0] is not None and prefix > best[0] >> (total - bits):
            return
        j = len(order)
        if j == n:
            if best[0] is None or prefix < best[0]:
                best[0], best[1] = prefix, tuple(order)
            return
        cols = {}
        t = unused
        while t:
            low = t & -t
            v = low.bit_length() - 1
            t ^= low
            col = 0
            for u in order:
                col = col << 1 | (adj[u] >> v & 1)
            cols[v] = col
        least = min(cols.values())
        seen_open, seen_closed = set(), set()
        for v, col in cols.items():
            if col != least:
                continue
            o, c = adj[v], adj[v] | 1 << v
            if o in seen_open or c in seen_closed:
                continue
            seen_open.add(o)
            seen_closed.add(c)
            order.append(v)
            rec(order, unused & ~(1 << v), prefix << j | col, bits + j)
            order.pop()

    rec([], (1 << n) - 1, 0, 0)
    return best[0], best[1]


def canonical_code(g: Graph) -> int:
    return canonical_labeling(g)[0]


def canonical_form(g: Graph) -> Graph:
    return code_to_graph(g.n, canonical_code(g))


@lru_cache(maxsize=None)
def canonical_codes(v: int) -> tuple[int, ...]:
    """Sorted canonical codes of all isomorphism classes on v vertices.

    Built by adding a vertex, with every possible neighbourhood, to each
    class on v-1 vertices.
    """
    if v < 0 or v > CANONICAL_CAP:
        raise InputError(f"canonical enumeration supports 0..{CANONICAL_CAP} vertices, got {v}")
    if v <= 1:
        return (0,)
    found = set()
    for code in canonical_codes(v - 1):
        base = code_to_graph(v - 1, code)
        for nbrs in range(1 << (v - 1)):
            edges = set(base.edges)
            edges.update((u, v - 1) for u in range(v - 1) if nbrs >> u & 1)
            found.add(canonical_code(Graph(v, frozenset(edges))))
    return tuple(sorted(found))


def enumerate_graphs(v: int, dedup: str = "none") -> Iterator[Graph]:
    """All labeled graphs on v vertices, or one canonical graph per isomorphism class."""
    if dedup == "none":
        if v < 0 or v > LABELED_CAP:
            raise InputError(f"labeled enumeration supports 0..{LABELED_CAP} vertices, got {v}")
        return (graph_from_mask(v, mask) for mask in range(1 << comb(v, 2)))
    if dedup == "canonical":
        return (code_to_graph(v, c) for c in canonical_codes(v))
    raise InputError(f"dedup must be 'none' or 'canonical', got {dedup!r}")


def _graph_list(vmax: int, dedup: str) -> list[Graph]:
    return list(enumerate_graphs(vmax, dedup))


# -- nu >= 4 implies m_2 > m_1 ---------------------------------------

def lemma31_values(g: Graph) -> tuple[int, int]:
    """``(m_1, m_2)`` computed directly: edges, and disjoint edge pairs."""
    m1 = g.m
    m2 = comb(m1, 2) - sum(comb(g.degree(v), 2) for v in range(g.n))
    return m1, m2


def _matching_masks(v: int, size: int) -> np.ndarray:
    pairs = edge_order(v)
    index = {p: i for i, p in enumerate(pairs)}
    masks = []

    def rec(free: tuple[int, ...], left: int, mask: int) -> None:
        if left == 0:
            masks.append(mask)
            return
        for a_pos, a in enumerate(free):
            if len(free) - a_pos < 2 * left:
                break
            # a is the smallest matched vertex still to place
            for b in free[a_pos + 1:]:
                rest = tuple(x for x in free[a_pos + 1:] if x != b)
                rec(rest, left - 1, mask | 1 << index[(a, b)])

    rec(tuple(range(v)), size, 0)
    return np.array(sorted(set(masks)), dtype=np.int64)


def _lemma31_shard(args: tuple[int, int, int]) -> tuple[int, int, int, int, list[int]]:
    from ._kernels import lemma31_scan

    v, lo, hi = args
    incident = np.zeros(v, dtype=np.int64)
    for i, (a, b) in enumerate(edge_order(v)):
        incident[a] |= 1 << i
        incident[b] |= 1 << i
    cex = np.zeros(64, dtype=np.int64)
    eligible, ncex, margin, mask = lemma31_scan(lo, hi, incident, _matching_masks(v, 4), cex)
    return int(eligible), int(ncex), int(margin), int(mask), [int(x) for x in cex[:min(ncex, 64)]]


def campaign_lemma31(vmax: int = 8, workers: int | None = None, shard_bits: int = 6) -> CampaignReport:
    """Every labeled graph on vmax vertices with a 4-matching has ``m_2 > m_1``."""
    if not 1 <= vmax <= LABELED_CAP:
        raise InputError(f"vmax must be in 1..{LABELED_CAP}")
    start = time.perf_counter()
    n_pairs = comb(vmax, 2)
    bits = min(shard_bits, n_pairs)
    width = 1 << (n_pairs - bits)
    shards = [(vmax, s * width, (s + 1) * width) for s in range(1 << bits)]
    parts = _map_shards(_lemma31_shard, shards, workers)

    report = CampaignReport("lemma31", {"vmax": vmax, "enumeration": "labeled"})
    report.examined = 1 << n_pairs
    eligible = sum(p[0] for p in parts)
    best = min(((p[2], p[3]) for p in parts if p[3] >= 0), default=None)
    for p in parts:
        for mask in p[4]:
            g = graph_from_mask(vmax, mask)
            m1, m2 = lemma31_values(g)
            report.counterexamples.append({"graph": g.to_text(), "m1": m1, "m2": m2})
    report.stats = {
        "eligible_nu_ge_4": eligible,
        "counterexample_total": sum(p[1] for p in parts),
        "shards": len(shards),
    }
    if best is not None:
        g = graph_from_mask(vmax, best[1])
        m1, m2 = lemma31_values(g)
        report.stats["min_margin"] = {"m2_minus_m1": best[0], "m1": m1, "m2": m2, "witness": g.to_text()}
    report.wall_time = time.perf_counter() - start
    return report


# -- m_k < m_l for k < l < n - k; strong unimodality ----------------

def _theorem32_shard(args: tuple[int, list[int]]) -> tuple[int, list[dict]]:
    v, codes = args
    bad = []
    for code in codes:
        g = code_to_graph(v, code)
        seq = matching_sequence(g)
        pairs = theorem32_check(seq, len(seq))
        unimodal = schwenk_check(seq)
        if pairs or not unimodal:
            bad.append({"graph": g.to_text(), "sequence": [str(x) for x in seq],
                        "violations": [list(p) for p in pairs], "strongly_unimodal": unimodal})
    return len(codes), bad


def _codes_for(vmax: int, dedup: str) -> list[int]:
    if dedup == "canonical":
        return list(canonical_codes(vmax))
    if dedup == "none":
        if vmax > LABELED_CAP:
            raise InputError(f"labeled enumeration supports up to {LABELED_CAP} vertices")
        n_pairs = comb(vmax, 2)
        # labeled masks re-expressed as codes (bit 0 of a mask is the MSB of a code)
        return [int(format(mask, f"0{n_pairs}b")[::-1], 2) if n_pairs else 0 for mask in range(1 << n_pairs)]
    raise InputError(f"dedup must be 'none' or 'canonical', got {dedup!r}")


def campaign_theorem32(vmax: int = 7, dedup: str = "canonical", workers: int | None = None) -> CampaignReport:
    if not 0 <= vmax <= 9:
        raise InputError("vmax must be in 0..9")
    start = time.perf_counter()
    codes = _codes_for(vmax, dedup)
    parts = _map_shards(_theorem32_shard, [(vmax, c) for c in _chunks(codes, 256)], workers)
    report = CampaignReport("theorem32", {"vmax": vmax, "dedup": dedup})
    report.examined = sum(p[0] for p in parts)
    report.counterexamples = [c for p in parts for c in p[1]]
    report.wall_time = time.perf_counter() - start
    return report


# -- Part 2: alpha = m and i_m < m^m force i_m < i_{m-1} --------------------

def part2_status(g: Graph, m: int) -> str:
    """'ineligible' (alpha != m), 'exempt' (i_m >= m^m), 'ok' or 'violation'."""
    seq = independent_set_sequence(g)
    if len(seq) != m:
        return "ineligible"
    if seq[m - 1] >= m**m:
        return "exempt"
    return "ok" if seq[m - 1] < seq[m - 2] else "violation"


def _part2_shard(args: tuple[int, int, list[int]]) -> tuple[dict, list[dict]]:
    m, v, codes = args
    tally = {"ineligible": 0, "exempt": 0, "ok": 0, "violation": 0}
    bad = []
    for code in codes:
        g = code_to_graph(v, code)
        status = part2_status(g, m)
        tally[status] += 1
        if status == "violation":
            bad.append({"graph": g.to_text(), "sequence": [str(x) for x in independent_set_sequence(g)]})
    return tally, bad


def campaign_part2(m: int, vmax: int = 7, dedup: str = "canonical", workers: int | None = None) -> CampaignReport:
    if m < 2:
        raise InputError("m must be >= 2")
    if not 0 <= vmax <= 9:
        raise InputError("vmax must be in 0..9")
    start = time.perf_counter()
    # isolated vertices change alpha here, so every order up to vmax is scanned
    shards = [(m, v, c) for v in range(vmax + 1) for c in _chunks(_codes_for(v, dedup), 256)]
    parts = _map_shards(_part2_shard, shards, workers)
    report = CampaignReport("part2", {"m": m, "vmax": vmax, "dedup": dedup})
    tally = {"ineligible": 0, "exempt": 0, "ok": 0, "violation": 0}
    for t, bad in parts:
        for key in tally:
            tally[key] += t[key]
        report.counterexamples.extend(bad)
    report.examined = sum(tally.values())
    report.stats = {"alpha_eq_m": tally["exempt"] + tally["ok"] + tally["violation"],
                    "eligible": tally["ok"] + tally["violation"], "exempt": tally["exempt"]}
    report.wall_time = time.perf_counter() - start
    return report


# -- census of realized matching permutations -------------------------------

def _classify_shard(args: tuple[int, list[int]]) -> dict:
    v, codes = args
    found: dict[tuple[int, ...], str] = {}
    for code in codes:
        g = code_to_graph(v, code)
        seq = matching_sequence(g)
        if seq and seq not in found:
            found[seq] = g.to_text()
    return found


def classify_records(vmax: int = 7, workers: int | None = None) -> list[dict]:
    """One record per distinct matching sequence over canonical graphs on vmax vertices.

    The witness is the first graph in canonical-code order with that sequence.
    """
    codes = _codes_for(vmax, "canonical")
    parts = _map_shards(_classify_shard, [(vmax, c) for c in _chunks(codes, 256)], workers)
    merged: dict[tuple[int, ...], str] = {}
    for part in parts:
        for seq, witness in part.items():
            merged.setdefault(seq, witness)
    records = []
    for seq in sorted(merged, key=lambda s: (len(s), s)):
        perms = sorted(enumerate_associated(seq))
        records.append({"n": len(seq), "sequence": [str(x) for x in seq],
                        "permutations": [list(p) for p in perms], "witness": merged[seq]})
    return records


def campaign_classify(vmax: int = 7, out: str | Path | None = None, workers: int | None = None) -> CampaignReport:
    """Census of matching permutations realized by graphs on at most vmax vertices.

    Counts per n are lower bounds on the number of matching permutations of
    [n]: larger graphs may realize more.
    """
    if not 0 <= vmax <= 9:
        raise InputError("vmax must be in 0..9")
    start = time.perf_counter()
    records = classify_records(vmax, workers)
    report = CampaignReport("classify", {"vmax": vmax, "dedup": "canonical"})
    report.examined = len(canonical_codes(vmax))
    census: dict[str, dict] = {}
    by_n: dict[int, set] = {}
    for rec in records:
        n = rec["n"]
        seq = tuple(int(x) for x in rec["sequence"])
        perms = {tuple(p) for p in rec["permutations"]}
        by_n.setdefault(n, set()).update(perms)
        entry = census.setdefault(str(n), {"sequences": 0})
        entry["sequences"] += 1
        bad_perms = [format_permutation(p) for p in sorted(perms) if not is_unimodal_perm(p)[0]]
        violations = theorem32_check(seq, n)
        if bad_perms or violations:
            report.counterexamples.append({"graph": rec["witness"], "sequence": rec["sequence"],
                                           "non_unimodal": bad_perms, "violations": [list(v) for v in violations]})
    for n, perms in by_n.items():
        census[str(n)]["permutations_lower_bound"] = len(perms)
        census[str(n)]["unimodal_total"] = 2 ** (n - 1)
    report.census = {k: census[k] for k in sorted(census, key=int)}
    report.stats = {"note": "permutation counts are lower bounds on M_n"}
    if out is not None:
        try:
            with open(out, "w") as fh:
                for rec in records:
                    fh.write(json.dumps(rec) + "\n")
        except OSError as exc:
            raise InputError(f"cannot write census to {out}: {exc}") from None
    report.wall_time = time.perf_counter() - start
    return report
