"""Compiled inner loops for the labeled-graph sweeps.

Graphs are edge bitmasks over the colex pair order of
:func:`permgraph.graph.edge_order`.
"""
import numba as nb
import numpy as np


@nb.njit(cache=True, inline="always")
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@nb.njit(cache=True)
def lemma31_scan(lo, hi, incident, matchings, cex_out):
    """Scan edge masks in ``[lo, hi)`` for graphs with a 4-matching and ``m_2 <= m_1``.

    ``incident[v]`` is the mask of pairs at vertex v; ``matchings`` lists the
    masks of all 4-matchings of the complete graph.  ``m_1`` is the edge
    count and ``m_2 = C(m_1, 2) - sum_v C(deg v, 2)`` counts disjoint pairs.

    Returns ``(eligible, n_counterexamples, min_margin, min_margin_mask)``;
    the first ``len(cex_out)`` counterexample masks are written to ``cex_out``.
    """
    nv = incident.shape[0]
    nm = matchings.shape[0]
    eligible = 0
    ncex = 0
    min_margin = np.int64(1) << 40
    min_mask = np.int64(-1)
    for g in range(lo, hi):
        m1 = _popcount(g)
        if m1 < 4:
            continue
        has = False
        for i in range(nm):
            if g & matchings[i] == matchings[i]:
                has = True
                break
        if not has:
            continue
        eligible += 1
        touching = 0
        for v in range(nv):
            d = _popcount(g & incident[v])
            touching += d * (d - 1) // 2
        m2 = m1 * (m1 - 1) // 2 - touching
        margin = m2 - m1
        if margin < min_margin:
            min_margin = margin
            min_mask = g
        if margin <= 0:
            if ncex < cex_out.shape[0]:
                cex_out[ncex] = g
            ncex += 1
    return eligible, ncex, min_margin, min_mask
