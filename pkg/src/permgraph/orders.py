"""Permutations and weak orders attached to sequences, unimodal permutations,
U-D words and the counting bounds for matching permutations.

Permutations are 1-based one-line tuples: ``(5, 1, 4, 2, 3)`` is 51423.
Sequences are 1-indexed tuples as produced by :mod:`permgraph.counting`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from math import comb, factorial, prod
from typing import Iterator, Sequence

from .errors import CapExceeded, InputError

ASSOC_CAP = 10**6


def validate_permutation(pi: Sequence[int]) -> tuple[int, ...]:
    pi = tuple(int(x) for x in pi)
    if sorted(pi) != list(range(1, len(pi) + 1)):
        raise InputError(f"{pi} is not a permutation of 1..{len(pi)}")
    return pi


def parse_permutation(text: str) -> tuple[int, ...]:
    """``"3,1,2"`` -> ``(3, 1, 2)``."""
    try:
        return validate_permutation(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise InputError(f"bad permutation {text!r}") from None


def format_permutation(pi: Sequence[int]) -> str:
    return ",".join(str(x) for x in pi)


def inverse(pi: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(pi)
    for pos, v in enumerate(pi, 1):
        inv[v - 1] = pos
    return tuple(inv)


@dataclass(frozen=True)
class WeakOrder:
    """Ordered partition ``(B_1, ..., B_l)`` of ``{1..m}`` into nonempty blocks."""

    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        blocks = tuple(frozenset(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if not blocks or any(not b for b in blocks):
            raise InputError("weak order needs at least one block and no empty blocks")
        members = [x for b in blocks for x in b]
        if sorted(members) != list(range(1, len(members) + 1)):
            raise InputError(f"blocks {self} do not partition 1..{len(members)}")

    @property
    def m(self) -> int:
        return sum(len(b) for b in self.blocks)

    @classmethod
    def parse(cls, text: str) -> "WeakOrder":
        """``"2|1,3"`` -> ``({2}, {1, 3})``."""
        try:
            return cls(tuple(frozenset(int(x) for x in part.split(",")) for part in text.split("|")))
        except ValueError:
            raise InputError(f"bad weak order {text!r}") from None

    def __str__(self) -> str:
        return "|".join(",".join(str(x) for x in sorted(b)) for b in self.blocks)


def enumerate_weak_orders(m: int) -> Iterator[WeakOrder]:
    """All ordered set partitions of ``{1..m}`` (Fubini numbers: 1, 3, 13, 75, ...)."""
    def rec(rest: tuple[int, ...]) -> Iterator[tuple[frozenset[int], ...]]:
        if not rest:
            yield ()
            return
        n = len(rest)
        for mask in range(1, 1 << n):
            first = frozenset(rest[i] for i in range(n) if mask >> i & 1)
            remaining = tuple(rest[i] for i in range(n) if not mask >> i & 1)
            for tail in rec(remaining):
                yield (first,) + tail

    for blocks in rec(tuple(range(1, m + 1))):
        yield WeakOrder(blocks)


def induced_weak_order(seq: Sequence[int]) -> WeakOrder:
    """Group equal values into blocks, blocks ordered by increasing value."""
    if not seq:
        raise InputError("empty sequence has no weak order")
    groups: dict = {}
    for i, v in enumerate(seq, 1):
        groups.setdefault(v, set()).add(i)
    return WeakOrder(tuple(frozenset(groups[v]) for v in sorted(groups)))


def associated_count(seq: Sequence[int]) -> int:
    return prod(factorial(len(b)) for b in induced_weak_order(seq).blocks)


def enumerate_associated(seq: Sequence[int], cap: int | None = ASSOC_CAP) -> Iterator[tuple[int, ...]]:
    """All permutations pi with ``seq[pi(1)] <= ... <= seq[pi(m)]``.

    Lazy; the total is known up front, and a total above ``cap`` raises
    :class:`CapExceeded` before anything is yielded.
    """
    blocks = [sorted(b) for b in induced_weak_order(seq).blocks]
    total = prod(factorial(len(b)) for b in blocks)
    if cap is not None and total > cap:
        raise CapExceeded(f"{total} associated permutations exceed cap {cap}")

    def gen():
        for parts in product(*(permutations(b) for b in blocks)):
            yield tuple(x for part in parts for x in part)

    return gen()


def check_chain(seq: Sequence[int], pi: Sequence[int], strict: bool = False) -> bool:
    """Whether ``seq[pi(1)] <= seq[pi(2)] <= ...`` (``<`` throughout when strict)."""
    if len(seq) != len(pi):
        raise InputError(f"sequence length {len(seq)} != permutation length {len(pi)}")
    vals = [seq[p - 1] for p in pi]
    if strict:
        return all(a < b for a, b in zip(vals, vals[1:]))
    return all(a <= b for a, b in zip(vals, vals[1:]))


def is_unimodal_perm(pi: Sequence[int]) -> tuple[bool, int]:
    """Check positions of 1..k-1 increase and positions of n..k+1 increase, k = pi(n).

    Returns ``(is_unimodal, k)``.
    """
    n = len(pi)
    if n == 0:
        return True, 0
    k = pi[-1]
    pos = inverse(pi)
    below = [pos[v - 1] for v in range(1, k)]
    above = [pos[v - 1] for v in range(n, k, -1)]
    ok = all(a < b for a, b in zip(below, below[1:])) and all(a < b for a, b in zip(above, above[1:]))
    return ok, k


def ud_decode(s: str) -> tuple[int, ...]:
    """Unimodal permutation of ``[len(s)+1]`` spelled by a U-D word.

    With t = #U + 1, each U emits the next of 1, 2, ..., t-1 and each D the
    next of n, n-1, ..., t+1; t itself goes last.
    """
    if set(s) - {"U", "D"}:
        raise InputError(f"U-D word may only contain U and D: {s!r}")
    n = len(s) + 1
    t = s.count("U") + 1
    low, high = 1, n
    out = []
    for ch in s:
        if ch == "U":
            out.append(low)
            low += 1
        else:
            out.append(high)
            high -= 1
    out.append(t)
    return tuple(out)


def ud_encode(pi: Sequence[int]) -> str:
    pi = validate_permutation(pi)
    ok, t = is_unimodal_perm(pi)
    if not ok:
        raise InputError(f"{format_permutation(pi)} is not unimodal")
    return "".join("U" if v < t else "D" for v in pi[:-1])


def enumerate_unimodal(n: int) -> Iterator[tuple[int, ...]]:
    """All ``2**(n-1)`` unimodal permutations of [n], one per U-D word."""
    if n < 1:
        raise InputError("n must be >= 1")
    for word in product("UD", repeat=n - 1):
        yield ud_decode("".join(word))


def _prefix_walk_count(length: int, floor: int) -> int:
    """U-D words of the given length whose running (#U - #D) never drops below ``floor``."""
    counts = {0: 1}
    for _ in range(length):
        nxt: dict[int, int] = {}
        for h, c in counts.items():
            for step in (1, -1):
                if h + step >= floor:
                    nxt[h + step] = nxt.get(h + step, 0) + c
        counts = nxt
    return sum(counts.values())


def admissible_count(length: int) -> int:
    """U-D words with no prefix having three more D's than U's."""
    if length < 0:
        raise InputError("length must be >= 0")
    return _prefix_walk_count(length, -2)


def admissible_count_formula(length: int) -> int:
    """Closed form for :func:`admissible_count`.

    With ``f(n) = (3n/2 + 1) / (2n + 2) * C(n+1, n/2 + 1)`` for even n, the
    count is ``f(L+1)`` for odd L and ``2 f(L)`` for even L.
    """
    def f(n: int) -> Fraction:
        return Fraction(3 * n + 2, 2 * (2 * n + 2)) * comb(n + 1, n // 2 + 1)

    val = f(length + 1) if length % 2 else 2 * f(length)
    if val.denominator != 1:
        raise ArithmeticError(f"non-integral closed form at length {length}")
    return int(val)


def dyck_left_factor_count(length: int) -> int:
    """U-D words where no prefix has more D's than U's; equals ``C(L, floor(L/2))``."""
    if length < 0:
        raise InputError("length must be >= 0")
    dp = _prefix_walk_count(length, 0)
    closed = comb(length, length // 2)
    if dp != closed:
        raise ArithmeticError(f"left-factor count mismatch at {length}: {dp} vs {closed}")
    return dp


def mn_upper_bounds(n: int) -> dict[str, int]:
    """Three upper bounds on the number of matching permutations of [n].

    ``mode_sum``: unimodal permutations with mode at floor(n/2) or later;
    ``admissible``: admissible U-D words of length n-1;
    ``dyck``: Dyck left factors of length n+1.
    """
    if n < 1:
        raise InputError("n must be >= 1")
    mode_sum = sum(comb(n - 1, k) for k in range(max(0, n // 2 - 1), n))
    return {
        "mode_sum": mode_sum,
        "admissible": admissible_count(n - 1),
        "dyck": dyck_left_factor_count(n + 1),
    }


def theorem32_check(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    """Pairs (k, l) with ``0 <= k <= n//2 - 1``, ``k < l < n - k`` and ``m_k >= m_l``.

    A graph with a matching of size n must give an empty list; ``m_0 = 1``.
    """
    if n > len(seq):
        raise InputError(f"n={n} exceeds sequence length {len(seq)}")
    vals = (1,) + tuple(seq)
    return [
        (k, l)
        for k in range(n // 2)
        for l in range(k + 1, n - k)
        if vals[k] >= vals[l]
    ]


def schwenk_check(seq: Sequence[int]) -> bool:
    """Strict rise, at most one tie at the top, strict fall."""
    i, last = 0, len(seq) - 1
    while i < last and seq[i] < seq[i + 1]:
        i += 1
    if i < last and seq[i] == seq[i + 1]:
        i += 1
    while i < last and seq[i] > seq[i + 1]:
        i += 1
    return i >= last


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad rational {text!r}") from None


def esp_coefficients(roots: Sequence[Fraction | int]) -> tuple[Fraction, ...]:
    """Coefficients past the constant of ``prod (1 + r*x)``, in exact rationals."""
    poly = [Fraction(1)]
    for r in roots:
        r = Fraction(r)
        if r < 0:
            raise InputError(f"negative root {r}")
        poly = [a + r * b for a, b in zip(poly + [Fraction(0)], [Fraction(0)] + poly)]
    return tuple(poly[1:])
