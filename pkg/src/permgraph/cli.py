"""``permgraph`` command line.

Results go to stdout as JSON (or to ``--out``).  Exit status: 0 success,
1 bad input or cap exceeded, 2 verification failure or counterexample.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import constructions as con
from . import counting, orders, search
from .errors import InputError, PermgraphError, VerificationError
from .graph import parse_graph
from .joins import JoinExpr, expr_sequence, expr_stats, materialize


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _strs(seq) -> list[str]:
    return [str(x) for x in seq]


def _parse_seq(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise InputError(f"bad sequence {text!r}") from None
    if any(v < 0 for v in values):
        raise InputError("sequence values must be nonnegative")
    return values


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


class _Failed(Exception):
    """Verification did not pass; carries the payload to print before exiting 2."""

    def __init__(self, payload):
        self.payload = payload


def _expr_summary(e: JoinExpr) -> dict:
    vertices, alpha = expr_stats(e)
    return {"expr": e.to_json(), "vertices": vertices, "alpha": alpha,
            "sequence": _strs(expr_sequence(e)), "verified": True}


# -- command handlers -------------------------------------------------------

def cmd_count(args) -> dict:
    g = parse_graph(_read(args.graph))
    ind = counting.independent_set_sequence(g)
    mat = counting.matching_sequence(g)
    out = {"vertices": g.n, "edges": g.m, "alpha": len(ind), "nu": len(mat),
           "independent": counting.sequence_to_json("independent", ind),
           "matching": counting.sequence_to_json("matching", mat)}
    if args.oracle:
        o_ind, o_mat = counting.oracle_sequences(g)
        if (o_ind, o_mat) != (ind, mat):
            raise VerificationError(f"oracle disagrees: {o_ind} / {o_mat} vs {ind} / {mat}")
        out["oracle_checked"] = True
    return out


def cmd_construct(args) -> dict:
    kind = args.kind
    if kind == "gm":
        e = con.build_gm(args.m)
        params = {"m": args.m}
    elif kind == "hk":
        e = con.build_hk(args.m, args.k)
        params = {"m": args.m, "k": args.k}
    elif kind == "hw":
        w = orders.WeakOrder.parse(args.order)
        m = args.m if args.m is not None else w.m
        e = con.build_hw(m, w)
        params = {"m": m, "order": str(w)}
    else:
        pi = orders.parse_permutation(args.perm)
        e, t = con.build_gpi(pi, args.t0)
        params = {"perm": orders.format_permutation(pi), "t0": args.t0, "T": str(t)}
    return {"construction": kind, "params": params, **_expr_summary(e)}


def cmd_verify(args) -> dict:
    obj = json.loads(_read(args.expr))
    e = JoinExpr.from_json(obj["expr"] if "expr" in obj else obj)
    seq = expr_sequence(e)
    vertices, alpha = expr_stats(e)
    checks = {}
    if "sequence" in obj:
        checks["recorded_sequence"] = [int(x) for x in obj["sequence"]] == list(seq)
    if "vertices" in obj:
        checks["recorded_vertices"] = int(obj["vertices"]) == vertices
    if "alpha" in obj:
        checks["recorded_alpha"] = int(obj["alpha"]) == alpha
    if args.order:
        checks["weak_order"] = orders.induced_weak_order(seq) == orders.WeakOrder.parse(args.order)
    if args.perm:
        checks["strict_chain"] = orders.check_chain(seq, orders.parse_permutation(args.perm), strict=True)
    if args.oracle:
        g = materialize(e, args.max_vertices)
        checks["recursive_count"] = counting.independent_set_sequence(g) == seq
        checks["subset_oracle"] = counting.oracle_independent(g) == seq
    out = {"vertices": vertices, "alpha": alpha, "sequence": _strs(seq),
           "weak_order": str(orders.induced_weak_order(seq)) if seq else "",
           "checks": checks, "verified": all(checks.values())}
    if not out["verified"]:
        raise _Failed(out)
    return out


def cmd_perms(args) -> dict:
    seq = _parse_seq(args.seq)
    if args.kind == "assoc":
        perms = list(orders.enumerate_associated(seq))
        return {"sequence": _strs(seq), "count": len(perms),
                "permutations": [orders.format_permutation(p) for p in perms]}
    if args.kind == "weak":
        return {"sequence": _strs(seq), "weak_order": str(orders.induced_weak_order(seq))}
    pi = orders.parse_permutation(args.perm)
    return {"sequence": _strs(seq), "perm": orders.format_permutation(pi), "strict": args.strict,
            "holds": orders.check_chain(seq, pi, strict=args.strict)}


def cmd_matching(args) -> dict:
    kind = args.kind
    if kind == "unimodal":
        pi = orders.parse_permutation(args.perm)
        ok, mode = orders.is_unimodal_perm(pi)
        return {"perm": orders.format_permutation(pi), "unimodal": ok, "mode": mode}
    if kind == "ud-encode":
        pi = orders.parse_permutation(args.perm)
        return {"perm": orders.format_permutation(pi), "s": orders.ud_encode(pi)}
    if kind == "ud-decode":
        return {"s": args.s, "permutation": orders.format_permutation(orders.ud_decode(args.s))}
    if kind == "admissible":
        return {"length": args.len, "count": str(orders.admissible_count(args.len)),
                "closed_form": str(orders.admissible_count_formula(args.len))}
    if kind == "bounds":
        b = orders.mn_upper_bounds(args.n)
        return {"n": args.n, **{k: str(v) for k, v in b.items()}, "unimodal_total": str(2 ** (args.n - 1))}
    seq = _parse_seq(args.seq)
    n = args.n if args.n is not None else len(seq)
    violations = orders.theorem32_check(seq, n)
    return {"sequence": _strs(seq), "n": n, "violations": [list(v) for v in violations],
            "consistent": not violations, "strongly_unimodal": orders.schwenk_check(seq)}


def cmd_poly(args) -> dict:
    roots = [orders.parse_fraction(r) for r in args.roots.split(",") if r.strip()]
    coeffs = orders.esp_coefficients(roots)
    out = {"roots": _strs(roots), "coefficients": _strs(coeffs)}
    if coeffs:
        out["weak_order"] = str(orders.induced_weak_order(coeffs))
        out["permutations"] = [orders.format_permutation(p) for p in orders.enumerate_associated(coeffs)]
    return out


_SEARCH_DEFAULTS = {"lemma31": (8, 8), "theorem32": (7, 7), "part2": (7, 7), "classify": (7, 7)}


def cmd_search(args) -> dict:
    default, standard_cap = _SEARCH_DEFAULTS[args.kind]
    vmax = default if args.max_vertices is None else args.max_vertices
    if vmax > standard_cap and not args.extended:
        raise InputError(f"--max-vertices {vmax} exceeds the standard cap {standard_cap}; pass --extended")
    if args.kind == "lemma31":
        report = search.campaign_lemma31(vmax)
    elif args.kind == "theorem32":
        report = search.campaign_theorem32(vmax, dedup=args.dedup)
    elif args.kind == "part2":
        if args.m is None:
            raise InputError("search part2 needs --m")
        report = search.campaign_part2(args.m, vmax, dedup=args.dedup)
    else:
        if args.out is None:
            raise InputError("search classify needs --out for the JSONL census")
        report = search.campaign_classify(vmax, args.out)
        args.out = None  # the report itself goes to stdout
    out = report.to_json()
    if not report.ok:
        raise _Failed(out)
    return out


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="permgraph", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, handler, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(handler=handler)
        sp.add_argument("--out", help="write the JSON result here instead of stdout")
        return sp

    c = add("count", cmd_count, "independent-set and matching sequences of a graph file")
    c.add_argument("--graph", required=True)
    c.add_argument("--oracle", action="store_true", help="cross-check by subset enumeration")

    c = add("construct", cmd_construct, "build a realizing join expression")
    c.add_argument("kind", choices=["gm", "hk", "hw", "gpi"])
    c.add_argument("--m", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--order")
    c.add_argument("--perm")
    c.add_argument("--t0", type=int, default=2)

    c = add("verify", cmd_verify, "re-check a join expression produced by construct")
    c.add_argument("--expr", required=True, help="JSON file from `construct` or a bare expression")
    c.add_argument("--order")
    c.add_argument("--perm")
    c.add_argument("--oracle", action="store_true", help="materialize and count explicitly")
    c.add_argument("--max-vertices", type=int, default=30)

    c = add("perms", cmd_perms, "permutations and weak orders of a sequence")
    c.add_argument("kind", choices=["assoc", "weak", "chain"])
    c.add_argument("--seq", required=True)
    c.add_argument("--perm")
    c.add_argument("--strict", action="store_true")

    c = add("matching", cmd_matching, "unimodal permutations, U-D words and bounds")
    c.add_argument("kind", choices=["unimodal", "ud-encode", "ud-decode", "admissible", "bounds", "check32"])
    c.add_argument("--perm")
    c.add_argument("--s")
    c.add_argument("--len", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--seq")

    c = add("poly", cmd_poly, "coefficients of prod (1 + r_i x)")
    c.add_argument("kind", choices=["esp"])
    c.add_argument("--roots", required=True)

    c = add("search", cmd_search, "exhaustive small-graph campaigns")
    c.add_argument("kind", choices=["lemma31", "theorem32", "part2", "classify"])
    c.add_argument("--max-vertices", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--dedup", choices=["canonical", "none"], default="canonical")
    c.add_argument("--extended", action="store_true", help="allow vertex counts above the standard caps")
    return p


_REQUIRED = {
    ("construct", "gm"): ["m"], ("construct", "hk"): ["m", "k"], ("construct", "hw"): ["order"],
    ("construct", "gpi"): ["perm"], ("perms", "chain"): ["perm"],
    ("matching", "unimodal"): ["perm"], ("matching", "ud-encode"): ["perm"], ("matching", "ud-decode"): ["s"],
    ("matching", "admissible"): ["len"], ("matching", "bounds"): ["n"], ("matching", "check32"): ["seq"],
}


def _emit(payload, out: str | None) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for flag in _REQUIRED.get((args.command, getattr(args, "kind", None)), []):
        if getattr(args, flag) is None:
            parser.error(f"{args.command} {args.kind} requires --{flag}")
    try:
        try:
            payload, code = args.handler(args), 0
        except _Failed as exc:
            payload, code = exc.payload, 2
        _emit(payload, args.out)
        return code
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 2
    except (InputError, PermgraphError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
