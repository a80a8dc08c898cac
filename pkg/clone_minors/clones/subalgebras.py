"""
Module for subalgebras and internal isomorphisms of (A; C), computed from
the generators of C.

A bijection between subuniverses that commutes with every generator commutes
with every term operation, so the clone never has to be materialized here.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from clone_minors.errors import DomainError
from clone_minors.operations import FiniteOp, enc, preserves_subset, tuple_matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Subalgebra:
    """A subuniverse of (A; C), stored as its sorted elements."""
    elements: Tuple[int, ...]

    @property
    def universe(self) -> FrozenSet[int]:
        return frozenset(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, value: int) -> bool:
        return value in self.elements


@dataclass(frozen=True)
class InternalIso:
    """
    An isomorphism between two subalgebras, domain[i] -> image[i].
    """
    domain: Tuple[int, ...]
    image: Tuple[int, ...]

    def __post_init__(self):
        if len(self.domain) != len(self.image) or len(set(self.image)) != len(self.image):
            raise DomainError("an internal isomorphism must be a bijection")

    @property
    def mapping(self) -> Dict[int, int]:
        return dict(zip(self.domain, self.image))

    def is_identity(self) -> bool:
        return self.domain == self.image

    def defined_on(self, values: Iterable[int]) -> bool:
        return set(values) <= set(self.domain)

    def __call__(self, values: Sequence[int]) -> Optional[Tuple[int, ...]]:
        """Coordinatewise action; None when some coordinate is outside the domain."""
        mapping = self.mapping
        if not self.defined_on(values):
            return None
        return tuple(mapping[v] for v in values)

    def inverse(self) -> "InternalIso":
        pairs = sorted(zip(self.image, self.domain))
        return InternalIso(tuple(a for a, _ in pairs), tuple(b for _, b in pairs))

    def then(self, other: "InternalIso") -> Optional["InternalIso"]:
        """other after self, when the image of self is the domain of other."""
        if set(self.image) != set(other.domain):
            return None
        mapping = other.mapping
        return InternalIso(self.domain, tuple(mapping[v] for v in self.image))

    def lookup_array(self, k: int) -> np.ndarray:
        """Length-k array with the image of each element, -1 outside the domain."""
        out = np.full(k, -1, dtype=np.int64)
        out[list(self.domain)] = self.image
        return out


def close_subset(generators: Sequence[FiniteOp], k: int, seed: Iterable[int]) -> FrozenSet[int]:
    """
    Smallest subset containing `seed` and closed under every generator.
    """
    current = set(seed)
    changed = True
    while changed:
        changed = False
        for g in generators:
            for args in itertools.product(sorted(current), repeat=g.n):
                value = g.table[enc(args, k)]
                if value not in current:
                    current.add(value)
                    changed = True
    return frozenset(current)


def find_subalgebras(generators: Sequence[FiniteOp], k: int) -> List[Subalgebra]:
    """
    All nonempty subsets of {0, ..., k-1} closed under every generator,
    ordered by size and then lexicographically.
    """
    found = []
    for size in range(1, k + 1):
        for subset in itertools.combinations(range(k), size):
            if all(preserves_subset(g, subset) for g in generators):
                found.append(Subalgebra(subset))
    return found


def iso_preservation_mask(tables: np.ndarray, k: int, n: int, iso: InternalIso) -> np.ndarray:
    """
    For each table row f: f(iota(a)) = iota(f(a)) for all a over dom(iota),
    which also forces f to preserve dom(iota).
    """
    lookup = iso.lookup_array(k)
    domain = np.array(iso.domain, dtype=np.int64)
    sub = tuple_matrix(len(domain), n).astype(np.int64)
    powers = k ** np.arange(n - 1, -1, -1, dtype=np.int64)
    source = domain[sub] @ powers
    target = lookup[domain[sub]] @ powers
    return (lookup[tables[:, source]] == tables[:, target]).all(axis=1)


def isos_mask(tables: np.ndarray, k: int, n: int, isos: Sequence[InternalIso]) -> np.ndarray:
    result = np.ones(len(tables), dtype=bool)
    for iso in isos:
        if iso.is_identity() and len(iso.domain) == k:
            continue
        result &= iso_preservation_mask(tables, k, n, iso)
    return result


def find_internal_isos(generators: Sequence[FiniteOp], k: int) -> List[InternalIso]:
    """
    All bijections between subuniverses that commute with every generator.
    """
    subalgebras = find_subalgebras(generators, k)
    isos = []
    for source in subalgebras:
        for target in subalgebras:
            if len(source) != len(target):
                continue
            for image in itertools.permutations(target.elements):
                iso = InternalIso(source.elements, image)
                if all(
                    iso_preservation_mask(g.values[None, :], k, g.n, iso)[0]
                    for g in generators
                ):
                    isos.append(iso)
    logger.debug("found %d internal isomorphisms over %d subalgebras", len(isos), len(subalgebras))
    return isos
