"""
Module for the natural maps between class posets of nested clones.

For C inside C' every C-class lies inside one C'-class; sending each
class to that superclass gives a surjective order-preserving map.
"""

import logging
from typing import Dict

from clone_minors.errors import DomainError, UnsupportedCloneError
from clone_minors.boolean.catalog import class_label, is_subclone
from clone_minors.clones.engine import Clone
from clone_minors.minors.decide import boolean_clone_id, equivalent
from clone_minors.minors.poset import Poset

logger = logging.getLogger(__name__)

NuMap = Dict[str, str]


def check_subclone(sub: Clone, sup: Clone) -> None:
    """
    Raises DomainError unless sub is contained in sup.

    The six Boolean discriminator clones use their known inclusion order;
    other clones are compared through the generators of `sub`.
    """
    if sub.k != sup.k:
        raise DomainError(f"{sub.name} and {sup.name} live on different bases")
    sub_id, sup_id = boolean_clone_id(sub), boolean_clone_id(sup)
    if sub_id is not None and sup_id is not None:
        if not is_subclone(sub_id, sup_id):
            raise DomainError(f"{sub.name} is not a subclone of {sup.name}")
        return
    if not sub.generators:
        raise UnsupportedCloneError(f"{sub.name} has no generators to test inclusion with")
    outside = [g for g in sub.generators if not sup.contains(g)]
    if outside:
        raise DomainError(f"{sub.name} is not a subclone of {sup.name}: {outside[0]} is missing")


def nu_map(sub: Clone, sup: Clone, poset_sub: Poset, poset_sup: Poset) -> NuMap:
    """
    Sends each C-class to the C'-class containing its representative.

    Args:
        sub: The smaller clone C
        sup: The larger clone C'
        poset_sub: Classes of C
        poset_sup: Classes of C'

    Returns:
        Map from labels of poset_sub to labels of poset_sup
    """
    check_subclone(sub, sup)
    sup_id = boolean_clone_id(sup)
    targets = set(poset_sup.labels)
    result: NuMap = {}
    for node in poset_sub.nodes:
        rep = node.representative
        if sup_id is not None:
            label = class_label(rep, sup_id).text
        else:
            label = next(
                (other.label for other in poset_sup.nodes if equivalent(rep, other.representative, sup)),
                None,
            )
        if label is None or label not in targets:
            raise DomainError(f"class {node.label} has no counterpart among the {sup.name} classes")
        result[node.label] = label
    logger.debug("nu %s -> %s: %s", sub.name, sup.name, result)
    return result


def is_surjective(nu: NuMap, poset_sup: Poset) -> bool:
    return set(nu.values()) == set(poset_sup.labels)


def is_order_preserving(nu: NuMap, poset_sub: Poset, poset_sup: Poset) -> bool:
    return all(poset_sup.leq(nu[lower], nu[upper]) for lower, upper in poset_sub.edges)


def compose_nu(first: NuMap, second: NuMap) -> NuMap:
    """second after first."""
    return {label: second[image] for label, image in first.items()}
