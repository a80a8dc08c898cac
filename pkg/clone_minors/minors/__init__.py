"""
Subpackage deciding minors and building class posets.
"""

from clone_minors.minors.orbits import (
    OrbitBlock,
    PhiMap,
    generated_subuniverse,
    orbits,
    phi_map,
)
from clone_minors.minors.decide import (
    MinorResult,
    equivalent,
    minor,
    minor_bruteforce,
    minor_decide,
    minor_decide_O,
    verify_witness,
)
from clone_minors.minors.poset import Poset, PosetNode
from clone_minors.minors.classes import class_frame, enumerate_classes
from clone_minors.minors.nu import compose_nu, is_order_preserving, is_surjective, nu_map

__all__ = [
    "OrbitBlock",
    "PhiMap",
    "generated_subuniverse",
    "orbits",
    "phi_map",
    "MinorResult",
    "equivalent",
    "minor",
    "minor_bruteforce",
    "minor_decide",
    "minor_decide_O",
    "verify_witness",
    "Poset",
    "PosetNode",
    "class_frame",
    "enumerate_classes",
    "compose_nu",
    "is_order_preserving",
    "is_surjective",
    "nu_map",
]
