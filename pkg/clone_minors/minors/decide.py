"""
Module deciding the C-minor and C-equivalence relations.

Three routes are available: the orbit criterion for discriminator clones,
an exhaustive composition search that works for any materializable
clone, and the Boolean fast path for the six Boolean discriminator
clones.
"""

import itertools
import logging
import warnings
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from clone_minors.errors import CapExceededError, DomainError, UnsupportedCloneError
from clone_minors.operations import (
    FiniteOp,
    compose,
    dec,
    image,
    ops_from_matrix,
    tuple_matrix,
)
from clone_minors.boolean.catalog import BooleanCloneId, boolean_minor
from clone_minors.clones.engine import Clone, compose_product
from clone_minors.minors.orbits import isos_on, orbits

logger = logging.getLogger(__name__)

METHODS = ("auto", "decide", "brute")


@dataclass(frozen=True)
class MinorResult:
    """
    Outcome of a minor test.

    Args:
        holds: Whether f is a C-minor of g
        witness: Operations h_1..h_m of C with f = g(h_1, ..., h_m), when known
    """
    holds: bool
    witness: Optional[Tuple[FiniteOp, ...]] = None

    def __bool__(self) -> bool:
        return self.holds


def _check_pair(f: FiniteOp, g: FiniteOp, clone: Clone) -> None:
    if f.k != g.k or f.k != clone.k:
        raise DomainError(f"base mismatch: f on {f.k}, g on {g.k}, clone on {clone.k} elements")


def minor_decide(f: FiniteOp, g: FiniteOp, clone: Clone) -> MinorResult:
    """
    Decides f <=_C g for a discriminator clone C through its internal
    isomorphisms.

    For every block c/~ of A^n there must be a tuple d over the subuniverse
    generated by c with f(iota(c)) = g(iota(d)) for every internal
    isomorphism iota defined on c. The chosen d's give the witness.

    Args:
        f: n-ary operation
        g: m-ary operation
        clone: Discriminator clone

    Returns:
        MinorResult with a witness when the relation holds
    """
    _check_pair(f, g, clone)
    if not clone.is_discriminator():
        raise UnsupportedCloneError(
            f"{clone.name} does not contain the discriminator; use minor_bruteforce"
        )
    k, n, m = clone.k, f.n, g.n
    isos = clone.internal_isos()
    powers_n = k ** np.arange(n - 1, -1, -1, dtype=np.int64)
    powers_m = k ** np.arange(m - 1, -1, -1, dtype=np.int64)
    inner = np.zeros((k ** n, m), dtype=np.uint8)

    for block in orbits(clone, n):
        c = block.representative
        acting = isos_on(isos, c)
        lookups = np.array([iso.lookup_array(k) for iso in acting])
        sources = lookups[:, list(c)] @ powers_n
        wanted = f.values[sources]

        universe = np.array(clone.subuniverse(c).elements, dtype=np.int64)
        candidates = universe[tuple_matrix(len(universe), m).astype(np.int64)]
        images = lookups[:, candidates]
        found = (g.values[images @ powers_m] == wanted[:, None]).all(axis=0)
        if not found.any():
            logger.debug("no target for block of %s", c)
            return MinorResult(False)
        chosen = int(np.argmax(found))
        inner[sources] = images[:, chosen, :]

    witness = ops_from_matrix(inner.T, k, n)
    return MinorResult(True, witness)


def minor_bruteforce(f: FiniteOp, g: FiniteOp, clone: Clone) -> MinorResult:
    """
    Searches (C^(n))^m for h with f = g(h_1, ..., h_m).

    Args:
        f: n-ary operation
        g: m-ary operation
        clone: Any clone that can be materialized at arity n

    Returns:
        MinorResult with the first witness found in code order
    """
    _check_pair(f, g, clone)
    members = clone.member_matrix(f.n)
    size, m = len(members), g.n
    clone.limits.check_budget(size ** m)
    logger.debug("brute force over %d^%d candidate tuples", size, m)

    target = f.values
    for row, tables in compose_product(g, [members] * m):
        hits = np.flatnonzero((tables == target).all(axis=1))
        if len(hits):
            rest = dec(int(hits[0]), size, m - 1) if m > 1 else ()
            chosen = (row,) + tuple(rest)
            witness = ops_from_matrix(members[list(chosen)], clone.k, f.n)
            return MinorResult(True, witness)
    return MinorResult(False)


def minor_decide_O(f: FiniteOp, g: FiniteOp) -> bool:
    """
    f <=_O g over the clone of all operations: Im(f) inside Im(g).
    """
    if f.k != g.k:
        raise DomainError(f"base mismatch: {f.k} vs {g.k}")
    return image(f) <= image(g)


def boolean_clone_id(clone: Clone) -> Optional[BooleanCloneId]:
    if clone.k == 2 and clone.name in {c.value for c in BooleanCloneId}:
        return BooleanCloneId(clone.name)
    return None


def _decidable(clone: Clone) -> bool:
    # t may only be found at arity 3, which can be over the cell cap
    try:
        return clone.is_discriminator()
    except CapExceededError:
        logger.debug("%s: discriminator membership is over the cap", clone.name)
        return False


def minor(f: FiniteOp, g: FiniteOp, clone: Clone, method: str = "auto") -> MinorResult:
    """
    Decides f <=_C g.

    Args:
        f: Operation
        g: Operation
        clone: Clone
        method: "decide" for the orbit criterion, "brute" for exhaustive
                search, "auto" to pick the fastest route available

    Returns:
        MinorResult
    """
    if method not in METHODS:
        raise DomainError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")
    if method == "decide":
        return minor_decide(f, g, clone)
    if method == "brute":
        return minor_bruteforce(f, g, clone)

    fast = boolean_clone_id(clone)
    if fast is not None:
        _check_pair(f, g, clone)
        return MinorResult(boolean_minor(f, g, fast))
    if clone.generators and _decidable(clone):
        return minor_decide(f, g, clone)
    warnings.warn(f"{clone.name} is not a known discriminator clone; falling back to brute force")
    return minor_bruteforce(f, g, clone)


def equivalent(f: FiniteOp, g: FiniteOp, clone: Clone, method: str = "auto") -> bool:
    """Tells whether f and g are C-minors of each other."""
    return bool(minor(f, g, clone, method)) and bool(minor(g, f, clone, method))


def verify_witness(f: FiniteOp, g: FiniteOp, clone: Clone, witness: Tuple[FiniteOp, ...]) -> bool:
    """Checks f = g(h_1, ..., h_m) with every h_i in the clone."""
    return compose(g, witness) == f and all(clone.contains(h) for h in witness)


def all_ops(k: int, max_arity: int):
    """Every operation of arity 1..max_arity on k elements, by arity then code."""
    for n in range(1, max_arity + 1):
        for values in itertools.product(range(k), repeat=k ** n):
            yield FiniteOp.from_values(k, n, values)
