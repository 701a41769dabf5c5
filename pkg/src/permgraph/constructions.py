"""Join-of-cliques graphs realizing permutations and weak orders.

Every builder works on :class:`~permgraph.joins.JoinExpr` values and checks
its own output exactly before returning; a failed check raises
:class:`~permgraph.errors.VerificationError`.

The shared skeleton is "fix sizes downward": starting from a seed whose top
counts are already right, for j = m-1, ..., 1 join copies of ``j*K_m``
until ``i_j`` hits its target.  One copy of ``j*K_m`` adds ``m**j`` to
``i_j``, ``C(j,t) m**t`` to every ``i_t`` with ``t < j``, and nothing above j.
"""
from __future__ import annotations

from math import comb
from typing import Callable, Sequence

from .errors import InputError, VerificationError
from .joins import Atom, JoinExpr, expr_sequence, expr_stats
from .orders import WeakOrder, check_chain, induced_weak_order, validate_permutation


def a_sequence(m: int, extended: bool = False) -> tuple[int, ...]:
    """Copy counts ``(a_0, ..., a_{m-1})`` used by the G_m construction.

    Defined by ``m**k = sum_j a_j C(m-j, k-j)`` for ``k = 0..m-1`` (to ``k = m``
    with ``extended``).  Solved by forward substitution and by the closed
    alternating sum ``a_k = sum_j (-1)**(k-j) m**j C(m-j, k-j)``; the two must agree.
    """
    if m < 1:
        raise InputError("m must be >= 1")
    top = m + 1 if extended else m
    forward: list[int] = []
    for k in range(top):
        forward.append(m**k - sum(a * comb(m - j, k - j) for j, a in enumerate(forward)))
    explicit = [
        sum((-1) ** (k - j) * m**j * comb(m - j, k - j) for j in range(k + 1))
        for k in range(top)
    ]
    if forward != explicit:
        raise VerificationError(f"a-sequence mismatch for m={m}: {forward} vs {explicit}")
    return tuple(forward)


def binomial_inverse_entry(m: int, k: int, l: int) -> int:
    """Entry (k, l) of M @ Minv where M[i][j] = C(m-j, i-j) and Minv[i][j] = (-1)**(i-j) C(m-j, i-j)."""
    return sum((-1) ** (t - l) * comb(m - t, k - t) * comb(m - l, t - l) for t in range(l, k + 1))


def decreasing_terms(k: int, n: int) -> list[int]:
    """``C(k, j) * n**(k-j)`` for ``j = 0..k-1``; non-increasing whenever k <= n."""
    return [comb(k, j) * n ** (k - j) for j in range(k)]


def _size(e: JoinExpr, j: int) -> int:
    seq = expr_sequence(e)
    return seq[j - 1] if j <= len(seq) else 0


def top_off(e: JoinExpr, m: int, j: int, target: int) -> JoinExpr:
    """Join enough copies of ``j*K_m`` to bring ``i_j`` up to ``target``."""
    deficit = target - _size(e, j)
    if deficit < 0:
        raise VerificationError(f"i_{j} overshoots target {target} by {-deficit}")
    step = m**j
    if deficit % step:
        raise VerificationError(f"deficit {deficit} at size {j} is not a multiple of {step}")
    return e.add(Atom.cliques(j, m), deficit // step)


def _check_pending(e: JoinExpr, m: int, j: int) -> None:
    """Unfixed counts ``i_j > i_{j-1} > ... > i_1`` with ``m**t | i_t``."""
    seq = expr_sequence(e)
    pending = [seq[t - 1] if t <= len(seq) else 0 for t in range(j, 0, -1)]
    if any(x <= y for x, y in zip(pending, pending[1:])):
        raise VerificationError(f"unfixed counts {pending} are not strictly decreasing")
    if any(seq[t - 1] % m**t for t in range(1, j + 1)):
        raise VerificationError(f"unfixed counts {pending} break divisibility by powers of {m}")


def _fix_downward(e: JoinExpr, m: int, start: int, target: Callable[[int], int],
                  record: list[int] | None = None, stop: int = 1) -> JoinExpr:
    for j in range(start, stop - 1, -1):
        _check_pending(e, m, j)
        before = e.atom_count
        e = top_off(e, m, j, target(j))
        if record is not None:
            record.append(e.atom_count - before)
    return e


def _expect(cond: bool, what: str) -> None:
    if not cond:
        raise VerificationError(what)


def build_gm(m: int) -> JoinExpr:
    """Graph on ``m**m`` vertices with ``m**m`` independent sets of every size 1..m."""
    if m < 1:
        raise InputError("m must be >= 1")
    copies: list[int] = []
    e = _fix_downward(JoinExpr.of(Atom.cliques(m, m)), m, m - 1, lambda j: m**m, copies)
    a = a_sequence(m)
    # copies at size j = m-k must equal a_k
    _expect(copies == [a[m - j] for j in range(m - 1, 0, -1)], f"copy counts {copies} disagree with a-sequence {a}")
    _expect(expr_sequence(e) == (m**m,) * m, "G_m sequence is not constant m^m")
    _expect(expr_stats(e) == (m**m, m), "G_m has wrong vertex count or alpha")
    return e


def hk_profile(m: int, k: int) -> tuple[int, ...]:
    """Target sequence of H_k: ``s(k)`` everywhere, plus ``m**(m-1)`` at index k."""
    s = 2 * m**m - m ** (m - 1) if k == m else m**m
    return tuple(s + (m ** (m - 1) if t == k else 0) for t in range(1, m + 1))


def build_hk(m: int, k: int) -> JoinExpr:
    """Graph whose sequence is flat except for a bump of ``m**(m-1)`` at size k."""
    if m < 3 or not 1 <= k <= m:
        raise InputError(f"build_hk needs m >= 3 and 1 <= k <= m, got m={m}, k={k}")
    full = m**m
    if k == 1:
        e = build_gm(m).add(Atom.cliques(1, m ** (m - 1)))
    elif k < m:
        e = _fix_downward(JoinExpr.of(Atom.cliques(m, m)), m, m - 1, lambda j: full, stop=k)
        # sizes k..m are at m^m; push size k one step further
        e = e.add(Atom.cliques(k, m), m ** (m - k - 1))
        e = _fix_downward(e, m, k - 1, lambda j: full)
    else:
        seed = Atom(((1, 2 * m), (m - 1, m)))
        s = 2 * m**m - m ** (m - 1)
        e = _fix_downward(JoinExpr.of(seed), m, m - 1, lambda j: s)
    _expect(expr_sequence(e) == hk_profile(m, k), f"H_{k} (m={m}) misses its profile")
    _expect(expr_stats(e)[1] == m, f"H_{k} (m={m}) has wrong alpha")
    return e


# weak orders on [2], realized directly
_SMALL_HW = {
    "1,2": JoinExpr.of(Atom.cliques(2, 2)),            # (4, 4)
    "1|2": JoinExpr.of(Atom(((1, 3), (1, 2)))),        # (5, 6)
    "2|1": JoinExpr.of(Atom.cliques(2, 1)),            # (2, 1): edgeless on two vertices
}


def build_hw(m: int, w: WeakOrder) -> JoinExpr:
    """Graph with independence number m whose sequence induces the weak order w."""
    if w.m != m:
        raise InputError(f"weak order {w} is not on [{m}]")
    if m == 1:
        e = JoinExpr.of(Atom.cliques(1, 1))
    elif m == 2:
        e = _SMALL_HW[str(w)]
    else:
        e = JoinExpr()
        gm = build_gm(m)
        hk = {k: build_hk(m, k) for k in range(1, m + 1)}
        for j, block in enumerate(w.blocks, 1):
            for k in sorted(block):
                e = e.join(gm) if j == 1 else e.join(hk[k], copies=j - 1)
    seq = expr_sequence(e)
    vertices, alpha = expr_stats(e)
    _expect(induced_weak_order(seq) == w, f"H(w) induces {induced_weak_order(seq)}, wanted {w}")
    _expect(alpha == m, "H(w) has wrong alpha")
    # m = 1 needs one vertex, which equals (not undercuts) 1^3
    _expect(vertices < m ** (m + 2) or (m == 1 and vertices == 1), f"H(w) has {vertices} vertices")
    return e


def iroot_ceil(x: int, k: int) -> int:
    """Smallest integer r >= 0 with ``r**k >= x``."""
    if x <= 0:
        return 0
    if k == 1:
        return x
    # integer Newton iteration for the floor root
    r = 1 << -(-x.bit_length() // k)
    while True:
        nxt = ((k - 1) * r + x // r ** (k - 1)) // k
        if nxt >= r:
            break
        r = nxt
    while r**k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r if r**k == x else r + 1


def gpi_expr(pi: Sequence[int], t: int) -> JoinExpr:
    """Join of ``k*K_{n_k}`` with ``n_k = ceil((pos(k) * t)**(1/k))``, pos = inverse permutation."""
    inv = {v: i for i, v in enumerate(pi, 1)}
    return JoinExpr.of(*(Atom.cliques(k, iroot_ceil(inv[k] * t, k)) for k in range(1, len(pi) + 1)))


def build_gpi(pi: Sequence[int], t0: int = 2, max_doublings: int = 256) -> tuple[JoinExpr, int]:
    """Realize ``i_pi(1) < ... < i_pi(m)`` strictly; return the expression and the T used.

    T runs through ``t0, 2*t0, 4*t0, ...`` until the exact sequence satisfies the chain.
    """
    pi = validate_permutation(pi)
    if t0 < 1:
        raise InputError("t0 must be >= 1")
    t = t0
    for _ in range(max_doublings):
        e = gpi_expr(pi, t)
        if check_chain(expr_sequence(e), pi, strict=True):
            return e, t
        t *= 2
    raise VerificationError(f"no T up to {t} realizes {pi}")
