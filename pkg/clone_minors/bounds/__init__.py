"""
Subpackage for the arity bound: blocks of A^n, counting, E_r signatures,
the d-ary reduction and the infinite-index chains.
"""

from clone_minors.bounds.breadth import BlockProjection, breadth, canonical_rep, growth_strings
from clone_minors.bounds.counting import (
    BoundReport,
    approx_equiv,
    check_bound,
    count_N,
    lower_bound_stirling,
    stirling,
)
from clone_minors.bounds.reduction import ErSignature, er_signature, minor_via_er, reduce_to_d_ary
from clone_minors.bounds.witnesses import chain_holds, chain_member, witness_matrix

__all__ = [
    "BlockProjection",
    "breadth",
    "canonical_rep",
    "growth_strings",
    "BoundReport",
    "approx_equiv",
    "check_bound",
    "count_N",
    "lower_bound_stirling",
    "stirling",
    "ErSignature",
    "er_signature",
    "minor_via_er",
    "reduce_to_d_ary",
    "chain_holds",
    "chain_member",
    "witness_matrix",
]
