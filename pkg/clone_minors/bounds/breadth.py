"""
Module for the ~_D blocks of A^n.

Under the clone generated by the discriminator, two tuples are related
exactly when they have the same pattern of equal coordinates. Each block
is therefore named by a restricted growth string: the tuple whose values
first appear in the order 0, 1, 2, ...
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, Sequence, Tuple

from clone_minors.errors import DomainError

Values = Tuple[int, ...]


def breadth(values: Sequence[int]) -> int:
    """Number of distinct coordinates."""
    return len(set(values))


def canonical_rep(values: Sequence[int]) -> Values:
    """
    Relabels values so that first occurrences read 0, 1, ..., r-1.

    This is the lexicographically least member of the ~_D block.
    """
    relabel: Dict[int, int] = {}
    for v in values:
        if v not in relabel:
            relabel[v] = len(relabel)
    return tuple(relabel[v] for v in values)


def growth_strings(n: int, r: int) -> Iterator[Values]:
    """
    Restricted growth strings of length n using exactly r values, in
    lexicographic order.

    Args:
        n: Length
        r: Number of distinct values

    Yields:
        Canonical representatives of the breadth-r blocks of A^n
    """
    if r < 1 or r > n:
        return

    def extend(prefix, top):
        position = len(prefix)
        if position == n:
            if top + 1 == r:
                yield tuple(prefix)
            return
        # enough positions must remain to introduce the missing values
        if r - (top + 1) > n - position:
            return
        for v in range(min(top + 2, r)):
            prefix.append(v)
            yield from extend(prefix, max(top, v))
            prefix.pop()

    yield from extend([0], 0)


@lru_cache(maxsize=None)
def injective_tuples(k: int, r: int) -> Tuple[Values, ...]:
    """
    P_r: the breadth-r block of A^r, i.e. all r-tuples of distinct elements,
    in lexicographic order.
    """
    if not 1 <= r <= k:
        raise DomainError(f"breadth {r} is not in 1..{k}")
    return tuple(itertools.permutations(range(k), r))


@dataclass(frozen=True)
class BlockProjection:
    """
    The bijection between a breadth-r block of A^n and P_r.

    Args:
        representative: Restricted growth string naming the block
    """
    representative: Values

    @property
    def n(self) -> int:
        return len(self.representative)

    @property
    def r(self) -> int:
        return breadth(self.representative)

    @property
    def positions(self) -> Values:
        """Positions of the first occurrences of 0, ..., r-1."""
        return tuple(self.representative.index(v) for v in range(self.r))

    def project(self, values: Sequence[int]) -> Values:
        if canonical_rep(values) != self.representative:
            raise DomainError(f"{tuple(values)} is not in the block of {self.representative}")
        return tuple(values[j] for j in self.positions)

    def lift(self, distinct: Sequence[int]) -> Values:
        """Inverse of project."""
        if len(distinct) != self.r or len(set(distinct)) != self.r:
            raise DomainError(f"{tuple(distinct)} is not in P_{self.r}")
        return tuple(distinct[v] for v in self.representative)


def block_size(k: int, r: int) -> int:
    """|P_r| = k (k-1) ... (k-r+1)."""
    size = 1
    for i in range(r):
        size *= k - i
    return size
