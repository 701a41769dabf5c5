"""Symbolic mutual joins of clique-union atoms.

An :class:`Atom` is a disjoint union of cliques ``c1*K_s1 + c2*K_s2 + ...``;
a :class:`JoinExpr` is the mutual join of atoms.  Independent k-sets of a
join (k >= 1) live inside a single part, so sequences add across atoms, and
an atom's sequence is the coefficient list of ``prod (1 + s*x)**c``.  This
lets constructions with millions of vertices be evaluated exactly without
building the graph.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .errors import CapExceeded, InputError
from .graph import Graph, complete, disjoint_union, mutual_join


@dataclass(frozen=True)
class Atom:
    """Normalized multiset of ``(multiplicity, clique size)`` pairs, largest cliques first."""

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.parts:
            raise InputError("an atom needs at least one part")
        merged: dict[int, int] = {}
        for c, s in self.parts:
            if c < 1 or s < 1:
                raise InputError(f"atom part ({c}, {s}) must be positive")
            merged[s] = merged.get(s, 0) + c
        norm = tuple((merged[s], s) for s in sorted(merged, reverse=True))
        object.__setattr__(self, "parts", norm)

    @classmethod
    def cliques(cls, count: int, size: int) -> "Atom":
        """``count`` disjoint copies of ``K_size``."""
        return cls(((count, size),))

    @property
    def vertices(self) -> int:
        return sum(c * s for c, s in self.parts)

    @property
    def alpha(self) -> int:
        return sum(c for c, _ in self.parts)

    def __str__(self) -> str:
        return " u ".join(f"{c}K_{s}" if c > 1 else f"K_{s}" for c, s in self.parts)


def atom_polynomial(a: Atom) -> tuple[int, ...]:
    """Independent-set sequence of an atom: coefficients of ``prod (1+s*x)**c`` past the constant."""
    poly = [1]
    for c, s in a.parts:
        for _ in range(c):
            nxt = poly + [0]
            for i in range(len(poly)):
                nxt[i + 1] += s * poly[i]
            poly = nxt
    return tuple(poly[1:])


@dataclass(frozen=True)
class JoinExpr:
    """Mutual join of atoms, stored as ordered ``(atom, copies)`` terms.

    Adjacent terms with the same atom are merged, so repeated top-off steps
    stay compact.
    """

    terms: tuple[tuple[Atom, int], ...] = ()

    def __post_init__(self):
        merged: list[tuple[Atom, int]] = []
        for atom, count in self.terms:
            if count < 0:
                raise InputError("negative atom count")
            if count == 0:
                continue
            if merged and merged[-1][0] == atom:
                merged[-1] = (atom, merged[-1][1] + count)
            else:
                merged.append((atom, count))
        object.__setattr__(self, "terms", tuple(merged))

    @classmethod
    def of(cls, *atoms: Atom) -> "JoinExpr":
        return cls(tuple((a, 1) for a in atoms))

    def join(self, other: "JoinExpr", copies: int = 1) -> "JoinExpr":
        """Join ``copies`` copies of ``other`` onto this expression."""
        return JoinExpr(self.terms + tuple((a, c * copies) for a, c in other.terms))

    def add(self, atom: Atom, copies: int = 1) -> "JoinExpr":
        return JoinExpr(self.terms + ((atom, copies),))

    def atoms(self) -> Iterable[Atom]:
        for atom, count in self.terms:
            for _ in range(count):
                yield atom

    @property
    def atom_count(self) -> int:
        return sum(c for _, c in self.terms)

    def __str__(self) -> str:
        return " + ".join(f"{c} x ({a})" if c > 1 else f"({a})" for a, c in self.terms) or "(empty)"

    def to_json(self) -> dict:
        atoms = []
        for atom, count in self.terms:
            rec = {"parts": [[c, s] for c, s in atom.parts]}
            if count != 1:
                rec["count"] = count
            atoms.append(rec)
        return {"atoms": atoms}

    @classmethod
    def from_json(cls, obj: dict | str) -> "JoinExpr":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            terms = tuple(
                (Atom(tuple((int(c), int(s)) for c, s in rec["parts"])), int(rec.get("count", 1)))
                for rec in obj["atoms"]
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed join expression: {exc}") from None
        return cls(terms)


def expr_sequence(e: JoinExpr) -> tuple[int, ...]:
    """Independent-set sequence of the join: term-wise sum of atom sequences."""
    total: list[int] = []
    for atom, count in e.terms:
        poly = atom_polynomial(atom)
        if len(poly) > len(total):
            total.extend([0] * (len(poly) - len(total)))
        for i, c in enumerate(poly):
            total[i] += count * c
    return tuple(total)


def expr_stats(e: JoinExpr) -> tuple[int, int]:
    """``(vertex count, independence number)``; alpha of a join is the max over its parts."""
    vertices = sum(count * atom.vertices for atom, count in e.terms)
    alpha = max((atom.alpha for atom, _ in e.terms), default=0)
    return vertices, alpha


def atom_graph(a: Atom) -> Graph:
    return disjoint_union([complete(s) for c, s in a.parts for _ in range(c)])


def materialize(e: JoinExpr, cap: int) -> Graph:
    vertices, _ = expr_stats(e)
    if vertices > cap:
        raise CapExceeded(f"expression has {vertices} vertices, cap is {cap}; use the symbolic path")
    return mutual_join([atom_graph(a) for a in e.atoms()])
