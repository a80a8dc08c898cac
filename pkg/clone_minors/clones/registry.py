"""
Module resolving clone identifiers to clone objects.

Boolean clones: O, T0, T1, Tid, S, D (the discriminator clones) and
M, L, R0, R1. For k >= 3: O, D and the maximal subclones E, K of D.
Any base: "gen:<op>,<op>,..." for the clone generated by the listed ops.
"""

import logging
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np

from clone_minors.config import EngineLimits, DEFAULT_LIMITS
from clone_minors.errors import DomainError
from clone_minors.operations import (
    boolean_and,
    boolean_or,
    constant,
    discriminator,
    negation,
    xor_chain,
)
from clone_minors.parsing import parse_generators, split_generated_id
from clone_minors.clones.engine import Clone, GeneratedClone, PredicateClone
from clone_minors.clones.relations import (
    all_mask,
    boolean_subcube_codes,
    fixes_mask,
    idempotent_mask,
    intersect_masks,
    linear_mask,
    monotone_mask,
    rho0_mask,
    rho1_mask,
    self_dual_mask,
)
from clone_minors.clones.subalgebras import find_internal_isos, isos_mask

logger = logging.getLogger(__name__)

BOOLEAN_DISCRIMINATOR_IDS: Tuple[str, ...] = ("O", "T0", "T1", "Tid", "S", "D")
BOOLEAN_IDS: Tuple[str, ...] = BOOLEAN_DISCRIMINATOR_IDS + ("M", "L", "R0", "R1")
GENERAL_IDS: Tuple[str, ...] = ("O", "D", "E", "K")


def _boolean_clone(clone_id: str, limits: EngineLimits) -> Clone:
    t = discriminator(2)
    c0, c1 = constant(2, 0), constant(2, 1)
    conj = boolean_and()

    table = {
        "O": (all_mask, (t, c0, c1)),
        "T0": (fixes_mask(0), (t, conj, c0)),
        "T1": (fixes_mask(1), (t, conj, c1)),
        "Tid": (idempotent_mask, (t, conj)),
        "S": (self_dual_mask, (t, negation())),
        "D": (intersect_masks(idempotent_mask, self_dual_mask), (t,)),
        "M": (monotone_mask, (conj, boolean_or(), c0, c1)),
        "L": (linear_mask, (xor_chain(2), c1)),
        "R0": (rho0_mask, ()),
        "R1": (rho1_mask, ()),
    }
    mask, generators = table[clone_id]
    return PredicateClone(2, clone_id, mask, generators, limits)


def _restricted_mask(d_isos, boolean_mask):
    """f in D whose restriction to {0,1} satisfies `boolean_mask`."""
    def mask(tables: np.ndarray, k: int, n: int) -> np.ndarray:
        in_d = isos_mask(tables, k, n, d_isos)
        sub = tables[:, boolean_subcube_codes(k, n)]
        sub = np.where(in_d[:, None], sub, 0).astype(np.uint8)
        return in_d & boolean_mask(sub, 2, n)
    return mask


def _general_clone(clone_id: str, k: int, limits: EngineLimits) -> Clone:
    t = discriminator(k)
    if clone_id == "O":
        generators = (t,) + tuple(constant(k, v) for v in range(k))
        return PredicateClone(k, "O", all_mask, generators, limits)
    if clone_id == "D":
        return GeneratedClone(k, "D", (t,), limits)

    d_isos = find_internal_isos((t,), k)
    boolean_mask = linear_mask if clone_id == "E" else monotone_mask
    return PredicateClone(k, clone_id, _restricted_mask(d_isos, boolean_mask), (), limits)


@lru_cache(maxsize=None)
def get_clone(clone_id: str, k: int = 2, limits: Optional[EngineLimits] = None) -> Clone:
    """
    Looks up a clone by identifier.

    Args:
        clone_id: Named clone or "gen:<op>,<op>,..."
        k: Base-set size (ignored for "gen:" ids, which carry their own base)
        limits: Enumeration caps

    Returns:
        Clone instance, shared across calls with equal arguments
    """
    limits = limits or DEFAULT_LIMITS
    is_generated, rest = split_generated_id(clone_id)
    if is_generated:
        generators = parse_generators(rest)
        base = generators[0].k if generators else k
        return GeneratedClone(base, clone_id, generators, limits)

    if k < 2:
        raise DomainError(f"base-set size must be at least 2, got {k}")
    if k == 2:
        if clone_id not in BOOLEAN_IDS:
            raise DomainError(f"unknown Boolean clone {clone_id!r}; expected one of {', '.join(BOOLEAN_IDS)}")
        return _boolean_clone(clone_id, limits)
    if clone_id not in GENERAL_IDS:
        raise DomainError(f"unknown clone {clone_id!r} for k={k}; expected one of {', '.join(GENERAL_IDS)}")
    logger.debug("building clone %s on %d elements", clone_id, k)
    return _general_clone(clone_id, k, limits)


def is_boolean_discriminator_id(clone_id: str) -> bool:
    return clone_id in BOOLEAN_DISCRIMINATOR_IDS
