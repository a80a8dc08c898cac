"""
Subpackage for clones: generation, membership, subalgebras and internal
isomorphisms.
"""

from clone_minors.clones.engine import (
    Clone,
    GeneratedClone,
    PredicateClone,
    contains,
    enumerate_arity,
    generate_arity,
    restrict_clone,
)
from clone_minors.clones.registry import (
    BOOLEAN_DISCRIMINATOR_IDS,
    BOOLEAN_IDS,
    get_clone,
)
from clone_minors.clones.relations import (
    LEQ,
    RHO_0,
    RHO_1,
    BinaryRelation,
    preserves_relation,
)
from clone_minors.clones.subalgebras import InternalIso, Subalgebra

__all__ = [
    "Clone",
    "GeneratedClone",
    "PredicateClone",
    "contains",
    "enumerate_arity",
    "generate_arity",
    "restrict_clone",
    "BOOLEAN_DISCRIMINATOR_IDS",
    "BOOLEAN_IDS",
    "get_clone",
    "LEQ",
    "RHO_0",
    "RHO_1",
    "BinaryRelation",
    "preserves_relation",
    "InternalIso",
    "Subalgebra",
]
