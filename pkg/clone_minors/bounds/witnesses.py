"""
Module checking the infinite chains of the clones M, R0 and R1.

For M and R0 the chain is f_n = x_1 + ... + x_n; R1 uses the duals. In
each case f_m is a minor of f_n exactly when m <= n, so these clones
have infinitely many equivalence classes.
"""

import logging
from typing import Optional

import pandas as pd

from clone_minors.config import EngineLimits
from clone_minors.errors import DomainError, UnsupportedCloneError
from clone_minors.operations import FiniteOp, dual, xor_chain
from clone_minors.clones.registry import get_clone
from clone_minors.minors.decide import minor_bruteforce

logger = logging.getLogger(__name__)

WITNESS_CLONES = ("M", "R0", "R1")


def chain_member(clone_id: str, n: int) -> FiniteOp:
    """The n-th operation of the chain used for `clone_id`."""
    if clone_id == "L":
        raise UnsupportedCloneError("no witness chain is constructed for the linear clone")
    if clone_id not in WITNESS_CLONES:
        raise DomainError(f"witness chains exist for {', '.join(WITNESS_CLONES)}, not {clone_id!r}")
    f = xor_chain(n)
    return dual(f) if clone_id == "R1" else f


def witness_matrix(
    clone_id: str, max_arity: int = 3, limits: Optional[EngineLimits] = None
) -> pd.DataFrame:
    """
    Brute-force matrix of f_m <=_C f_n for 1 <= m, n <= max_arity.

    Args:
        clone_id: M, R0 or R1
        max_arity: Largest chain index
        limits: Enumeration caps

    Returns:
        Boolean DataFrame indexed by m with columns n
    """
    if max_arity < 1:
        raise DomainError(f"max arity must be at least 1, got {max_arity}")
    clone = get_clone(clone_id, 2, limits)
    chain = [chain_member(clone_id, n) for n in range(1, max_arity + 1)]
    index = list(range(1, max_arity + 1))
    frame = pd.DataFrame(False, index=pd.Index(index, name="m"), columns=pd.Index(index, name="n"))
    for m, f_m in zip(index, chain):
        for n, f_n in zip(index, chain):
            frame.loc[m, n] = minor_bruteforce(f_m, f_n, clone).holds
    logger.info("%s witness matrix:\n%s", clone_id, frame)
    return frame


def chain_holds(frame: pd.DataFrame) -> bool:
    """True exactly on m <= n."""
    return all(bool(frame.loc[m, n]) == (m <= n) for m in frame.index for n in frame.columns)
