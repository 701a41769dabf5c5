"""Exact independent-set and matching sequences of graphs, join constructions
realizing any permutation or weak order, and the unimodal-permutation
machinery bounding matching permutations."""

from .constructions import a_sequence, build_gm, build_gpi, build_hk, build_hw, top_off
from .counting import (
    alpha,
    clique_counts,
    independent_set_sequence,
    matching_sequence,
    nu,
    oracle_sequences,
)
from .errors import CapExceeded, GraphFormatError, InputError, PermgraphError, VerificationError
from .graph import Graph, complement, complete, cycle, disjoint_union, empty, mutual_join, parse_graph, path
from .joins import Atom, JoinExpr, atom_polynomial, expr_sequence, expr_stats, materialize
from .orders import (
    WeakOrder,
    admissible_count,
    check_chain,
    dyck_left_factor_count,
    enumerate_associated,
    enumerate_unimodal,
    esp_coefficients,
    induced_weak_order,
    is_unimodal_perm,
    mn_upper_bounds,
    schwenk_check,
    theorem32_check,
    ud_decode,
    ud_encode,
)

__version__ = "0.1.0"

__all__ = [
    "a_sequence",
    "admissible_count",
    "alpha",
    "Atom",
    "atom_polynomial",
    "build_gm",
    "build_gpi",
    "build_hk",
    "build_hw",
    "CapExceeded",
    "check_chain",
    "clique_counts",
    "complement",
    "complete",
    "cycle",
    "disjoint_union",
    "dyck_left_factor_count",
    "empty",
    "enumerate_associated",
    "enumerate_unimodal",
    "esp_coefficients",
    "expr_sequence",
    "expr_stats",
    "Graph",
    "GraphFormatError",
    "independent_set_sequence",
    "induced_weak_order",
    "InputError",
    "is_unimodal_perm",
    "JoinExpr",
    "matching_sequence",
    "materialize",
    "mn_upper_bounds",
    "mutual_join",
    "nu",
    "oracle_sequences",
    "parse_graph",
    "path",
    "PermgraphError",
    "schwenk_check",
    "theorem32_check",
    "top_off",
    "ud_decode",
    "ud_encode",
    "VerificationError",
    "WeakOrder",
]
