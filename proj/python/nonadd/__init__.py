"""Capacities, non-additive integrals, interaction indices and axiom checks.

Set functions are dense lists indexed by subset mask: entry k holds the value
of the subset whose criteria are the set bits of k (bit i-1 for criterion i).
"""

from ._core import (
    Error,
    check_axioms,
    check_pseudo_product,
    co_mobius,
    compare,
    conjugate,
    evaluate,
    interaction_index,
    interaction_report,
    mobius,
    ordinal_mobius,
    rank,
    shapley,
    symmetric_max,
    validate,
    zeta,
)

__all__ = [
    "Error",
    "check_axioms",
    "check_pseudo_product",
    "co_mobius",
    "compare",
    "conjugate",
    "evaluate",
    "interaction_index",
    "interaction_report",
    "mobius",
    "ordinal_mobius",
    "rank",
    "shapley",
    "symmetric_max",
    "validate",
    "zeta",
]
