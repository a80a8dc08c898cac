"""
Module with relation-preservation tests and the membership predicates of
the named clones.

Every predicate works on a whole matrix of tables at once: it takes an
(N, k^n) uint8 array and returns a boolean mask of length N.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Tuple, Iterable

import numpy as np

from clone_minors.errors import DomainError
from clone_minors.operations import FiniteOp, enc, tuple_matrix


@dataclass(frozen=True)
class BinaryRelation:
    """
    A binary relation on {0, ..., k-1}.

    Args:
        k: Base-set size
        pairs: Ordered pairs in the relation
    """
    k: int
    pairs: FrozenSet[Tuple[int, int]]

    def __post_init__(self):
        for a, b in self.pairs:
            if not (0 <= a < self.k and 0 <= b < self.k):
                raise DomainError(f"pair {(a, b)} is not over 0..{self.k - 1}")

    @classmethod
    def of(cls, k: int, pairs: Iterable[Tuple[int, int]]) -> "BinaryRelation":
        return cls(k, frozenset((int(a), int(b)) for a, b in pairs))

    @property
    def matrix(self) -> np.ndarray:
        m = np.zeros((self.k, self.k), dtype=bool)
        for a, b in self.pairs:
            m[a, b] = True
        return m


RHO_0 = BinaryRelation.of(2, [(0, 0), (0, 1), (1, 0)])
RHO_1 = BinaryRelation.of(2, [(1, 1), (1, 0), (0, 1)])
LEQ = BinaryRelation.of(2, [(0, 0), (0, 1), (1, 1)])


@lru_cache(maxsize=None)
def related_tuple_codes(rel: BinaryRelation, n: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Codes of all pairs (a, b) of n-tuples that are coordinatewise rel-related.

    Returns:
        Two int64 arrays (codes of a, codes of b) of equal length
    """
    if not rel.pairs:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty
    pairs = np.array(sorted(rel.pairs), dtype=np.int64)
    # row j picks, per coordinate, which related pair that coordinate uses
    choice = tuple_matrix(len(pairs), n).astype(np.int64)
    powers = rel.k ** np.arange(n - 1, -1, -1, dtype=np.int64)
    left = pairs[choice, 0] @ powers
    right = pairs[choice, 1] @ powers
    return left, right


def relation_mask(tables: np.ndarray, rel: BinaryRelation, n: int) -> np.ndarray:
    left, right = related_tuple_codes(rel, n)
    return rel.matrix[tables[:, left], tables[:, right]].all(axis=1)


def preserves_relation(f: FiniteOp, rel: BinaryRelation) -> bool:
    """
    Tells whether f maps coordinatewise rel-related tuples to rel-related values.
    """
    if f.k != rel.k:
        raise DomainError(f"operation on {f.k} elements vs relation on {rel.k} elements")
    return bool(relation_mask(f.values[None, :], rel, f.n)[0])


def all_mask(tables: np.ndarray, k: int, n: int) -> np.ndarray:
    return np.ones(len(tables), dtype=bool)


def fixes_mask(value: int):
    """Predicate f(v, ..., v) = v."""
    def mask(tables: np.ndarray, k: int, n: int) -> np.ndarray:
        return tables[:, enc((value,) * n, k)] == value
    return mask


def idempotent_mask(tables: np.ndarray, k: int, n: int) -> np.ndarray:
    result = np.ones(len(tables), dtype=bool)
    for v in range(k):
        result &= fixes_mask(v)(tables, k, n)
    return result


def self_dual_mask(tables: np.ndarray, k: int, n: int) -> np.ndarray:
    # complementing all coordinates reverses the code order
    _require_boolean(k)
    return (tables[:, ::-1] == 1 - tables).all(axis=1)


def monotone_mask(tables: np.ndarray, k: int, n: int) -> np.ndarray:
    _require_boolean(k)
    return relation_mask(tables, LEQ, n)


def linear_mask(tables: np.ndarray, k: int, n: int) -> np.ndarray:
    """f = c_0 + c_1 x_1 + ... + c_n x_n over GF(2)."""
    _require_boolean(k)
    points = tuple_matrix(2, n).astype(np.int64)
    units = [1 << (n - 1 - i) for i in range(n)]
    base = tables[:, [0]].astype(np.int64)
    coefficients = tables[:, units].astype(np.int64) ^ base
    predicted = (base + coefficients @ points.T) % 2
    return (predicted == tables).all(axis=1)


def rho0_mask(tables: np.ndarray, k: int, n: int) -> np.ndarray:
    _require_boolean(k)
    return relation_mask(tables, RHO_0, n)


def rho1_mask(tables: np.ndarray, k: int, n: int) -> np.ndarray:
    _require_boolean(k)
    return relation_mask(tables, RHO_1, n)


def intersect_masks(*masks):
    def mask(tables: np.ndarray, k: int, n: int) -> np.ndarray:
        result = np.ones(len(tables), dtype=bool)
        for m in masks:
            result &= m(tables, k, n)
        return result
    return mask


def boolean_subcube_codes(k: int, n: int) -> np.ndarray:
    """Codes in A^n of the tuples in {0,1}^n, in {0,1}^n code order."""
    return np.array(
        [enc(bits, k) for bits in itertools.product((0, 1), repeat=n)],
        dtype=np.int64,
    )


def _require_boolean(k: int) -> None:
    if k != 2:
        raise DomainError(f"this predicate is defined for Boolean operations only (k={k})")
