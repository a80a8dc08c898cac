"""
Module for the ~_C blocks of A^n and the Phi maps between them.

Two tuples are ~_C related when some internal isomorphism of (A; C) sends
one to the other coordinatewise.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Tuple

import numpy as np

from clone_minors.errors import ConsistencyError, DomainError
from clone_minors.operations import dec, enc
from clone_minors.clones.engine import Clone
from clone_minors.clones.subalgebras import InternalIso, Subalgebra

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrbitBlock:
    """
    A ~_C block of A^n.

    Args:
        n: Tuple length
        representative: Lexicographically least member
        members: Codes of all members
    """
    n: int
    representative: Tuple[int, ...]
    members: FrozenSet[int]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, code: int) -> bool:
        return code in self.members


@dataclass(frozen=True)
class PhiMap:
    """
    The iso-preserving map from the block of c onto the block of d that
    sends c to d.
    """
    source: Tuple[int, ...]
    target: Tuple[int, ...]
    mapping: Dict[int, int]

    def __call__(self, code: int) -> int:
        return self.mapping[code]

    def is_bijective(self) -> bool:
        return len(set(self.mapping.values())) == len(self.mapping)


def isos_on(isos: Sequence[InternalIso], values: Sequence[int]) -> List[InternalIso]:
    """Internal isomorphisms whose domain contains every coordinate."""
    needed = set(values)
    return [iso for iso in isos if needed <= set(iso.domain)]


def orbits(clone: Clone, n: int) -> List[OrbitBlock]:
    """
    Partitions A^n into ~_C blocks.

    Args:
        clone: Clone with internal isomorphisms available
        n: Tuple length

    Returns:
        Blocks ordered by representative
    """
    k = clone.k
    clone.limits.check_cells(k, n)
    isos = clone.internal_isos()
    seen = np.zeros(k ** n, dtype=bool)
    blocks = []
    for code in range(k ** n):
        if seen[code]:
            continue
        a = dec(code, k, n)
        members = frozenset(enc(iso(a), k) for iso in isos_on(isos, a))
        members = members | {code}
        seen[list(members)] = True
        blocks.append(OrbitBlock(n, a, members))
    logger.debug("%s: %d blocks in A^%d", clone.name, len(blocks), n)
    return blocks


def generated_subuniverse(clone: Clone, values: Sequence[int]) -> Subalgebra:
    """
    The least subuniverse containing every coordinate of a tuple.
    """
    if any(v < 0 or v >= clone.k for v in values):
        raise DomainError(f"tuple {tuple(values)} is not over 0..{clone.k - 1}")
    return clone.subuniverse(values)


def phi_map(clone: Clone, c: Sequence[int], d: Sequence[int]) -> PhiMap:
    """
    Builds Phi_{d,c}: iota(c) -> iota(d) for every internal isomorphism
    iota defined on c.

    Args:
        clone: Clone with internal isomorphisms available
        c: Tuple in A^n
        d: Tuple in A^m whose subuniverse lies inside that of c

    Returns:
        PhiMap from codes of the block of c to codes of the block of d
    """
    c, d = tuple(c), tuple(d)
    k = clone.k
    s_c = generated_subuniverse(clone, c).universe
    s_d = generated_subuniverse(clone, d).universe
    if not s_d <= s_c:
        raise DomainError(f"subuniverse of {d} is not inside the subuniverse of {c}")

    mapping: Dict[int, int] = {}
    for iso in isos_on(clone.internal_isos(), c):
        source, target = enc(iso(c), k), enc(iso(d), k)
        if mapping.setdefault(source, target) != target:
            raise ConsistencyError(f"two isomorphisms agree on {c} but not on {d}")
    return PhiMap(c, d, mapping)
