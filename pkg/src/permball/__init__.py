"""Exact block- and prefix-transposition distances on permutations, with the
generating sets and bases of the balls around the identity."""

from .core import (
    BudgetError,
    DEFAULT_MAX_LEN,
    Perm,
    breakpoint_count,
    check_perm,
    contains_pattern,
    enumerate_plus_irreducible,
    format_perm,
    identity,
    invert,
    is_plus_irreducible,
    mi_member,
    mi_members,
    monotone_inflate,
    one_point_deletions,
    parse_perm,
    perm_set,
    plus_irreducible_count,
    reduce,
    strips,
)
from .models import (
    Model,
    apply_transposition,
    ball,
    distance,
    neighbors,
    pairwise_distance,
    transposition_triples,
)
from .genset import (
    GeneratingSetReport,
    PtdCase,
    generating_set,
    generating_set_constructive,
    generating_set_direct,
    index_multisets,
    mi_plus_one,
    mi_union_member,
    ptd_cases,
    ptd_inflate,
    ptd_parent,
    td_inflate,
)
from .basis import (
    BasisProbe,
    BasisReport,
    basis,
    basis_via_poset_descent,
    verify_class_closure,
)

__version__ = "0.1.0"

__all__ = [
    "BasisProbe",
    "BasisReport",
    "BudgetError",
    "DEFAULT_MAX_LEN",
    "GeneratingSetReport",
    "Model",
    "Perm",
    "PtdCase",
    "apply_transposition",
    "ball",
    "basis",
    "basis_via_poset_descent",
    "breakpoint_count",
    "check_perm",
    "contains_pattern",
    "distance",
    "enumerate_plus_irreducible",
    "format_perm",
    "generating_set",
    "generating_set_constructive",
    "generating_set_direct",
    "identity",
    "index_multisets",
    "invert",
    "is_plus_irreducible",
    "mi_member",
    "mi_members",
    "mi_plus_one",
    "mi_union_member",
    "monotone_inflate",
    "neighbors",
    "one_point_deletions",
    "pairwise_distance",
    "parse_perm",
    "perm_set",
    "plus_irreducible_count",
    "ptd_cases",
    "ptd_inflate",
    "ptd_parent",
    "reduce",
    "strips",
    "td_inflate",
    "transposition_triples",
    "verify_class_closure",
]
