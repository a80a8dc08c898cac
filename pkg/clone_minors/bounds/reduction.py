"""
Module for E_r signatures and the reduction of an operation to a
D-equivalent operation of a given arity.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

import numpy as np

from clone_minors.config import EngineLimits, DEFAULT_LIMITS
from clone_minors.errors import ConsistencyError, DomainError
from clone_minors.operations import FiniteOp, enc, pad_arity
from clone_minors.bounds.breadth import BlockProjection, growth_strings, injective_tuples
from clone_minors.bounds.counting import canonical_form, count_N, stirling
from clone_minors.clones.registry import get_clone
from clone_minors.minors.decide import equivalent

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ErSignature:
    """
    The symmetry classes of f restricted to its breadth-r blocks.

    Args:
        r: Breadth
        classes: Canonical forms of the functions f|_P o pi_P^-1 on P_r
    """
    r: int
    classes: FrozenSet[Tuple[int, ...]]

    def __len__(self) -> int:
        return len(self.classes)

    def __le__(self, other: "ErSignature") -> bool:
        return self.r == other.r and self.classes <= other.classes


def block_function(f: FiniteOp, block: BlockProjection) -> Tuple[int, ...]:
    """f|_P o pi_P^-1 as its values on P_r in lexicographic order."""
    return tuple(f.table[enc(block.lift(p), f.k)] for p in injective_tuples(f.k, block.r))


def er_signature(f: FiniteOp, r: int) -> ErSignature:
    """
    E_r(f): symmetry classes of f over all breadth-r blocks of A^n.

    Empty when A^n has no block of breadth r.
    """
    if r < 1:
        raise DomainError(f"breadth must be at least 1, got {r}")
    if r > f.k:
        return ErSignature(r, frozenset())
    classes = frozenset(
        canonical_form(block_function(f, BlockProjection(rep)), f.k, r)
        for rep in growth_strings(f.n, r)
    )
    return ErSignature(r, classes)


def minor_via_er(f: FiniteOp, g: FiniteOp) -> bool:
    """
    Sufficient test for f <=_D g: E_r(f) inside E_r(g) for every r.

    The r = 1 signature is the diagonal of each operation, so it also
    pins the values on constant tuples.
    """
    if f.k != g.k:
        raise DomainError(f"base mismatch: {f.k} vs {g.k}")
    return all(er_signature(f, r) <= er_signature(g, r) for r in range(1, f.k + 1))


def reduce_to_d_ary(
    f: FiniteOp,
    d: int,
    verify: Optional[str] = "decide",
    limits: Optional[EngineLimits] = None,
) -> FiniteOp:
    """
    Builds a d-ary operation D-equivalent to f.

    Each breadth-r block of A^d receives one symmetry class of E_r(f);
    the first |E_r(f)| blocks in canonical order get distinct classes and
    the rest repeat the first one.

    Args:
        f: Operation
        d: Target arity
        verify: Minor method used to confirm equivalence afterwards, or None
        limits: Enumeration caps; the d-ary table must fit the cell cap

    Returns:
        d-ary FiniteOp g with the same signatures as f
    """
    limits = limits or DEFAULT_LIMITS
    if d < 1:
        raise DomainError(f"target arity must be at least 1, got {d}")
    if f.n <= d:
        return pad_arity(f, d)

    k = f.k
    signatures = {r: sorted(er_signature(f, r).classes) for r in range(1, min(k, f.n) + 1)}
    for r, classes in signatures.items():
        if r >= 2 and len(classes) > stirling(d, r):
            raise DomainError(
                f"breadth {r}: {len(classes)} classes (N({k},{r}) = {count_N(k, r)}) do not fit "
                f"into S({d},{r}) = {stirling(d, r)} blocks"
            )
    limits.check_cells(k, d)

    table = np.zeros(k ** d, dtype=np.uint8)
    for r, classes in signatures.items():
        if r > d:
            continue
        points = injective_tuples(k, r)
        for position, rep in enumerate(growth_strings(d, r)):
            values = classes[position] if position < len(classes) else classes[0]
            block = BlockProjection(rep)
            for p, value in zip(points, values):
                table[enc(block.lift(p), k)] = value
    g = FiniteOp(k, d, table.tobytes())

    if verify is not None:
        _verify(f, g, verify, limits)
    return g


def _verify(f: FiniteOp, g: FiniteOp, method: str, limits: EngineLimits) -> None:
    clone = get_clone("D", f.k, limits)
    if not equivalent(f, g, clone, method):
        raise ConsistencyError(f"reduction of {f} to {g} is not D-equivalent")
    logger.debug("reduced %s to %s", f, g)
