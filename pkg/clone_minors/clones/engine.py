"""
Main module of the clone engine: clones given by generators or by a
membership predicate, materialized one arity at a time.
"""

import logging
import threading
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from clone_minors.config import EngineLimits, DEFAULT_LIMITS
from clone_minors.errors import DomainError, UnsupportedCloneError
from clone_minors.operations import (
    FiniteOp,
    discriminator,
    matrix_codes,
    ops_from_matrix,
    preserves_subset,
    projections,
    restrict,
    table_matrix,
)
from clone_minors.clones.subalgebras import (
    InternalIso,
    Subalgebra,
    close_subset,
    find_internal_isos,
    find_subalgebras,
    isos_mask,
)

logger = logging.getLogger(__name__)

Mask = Callable[[np.ndarray, int, int], np.ndarray]


class Clone:
    """
    A clone on {0, ..., k-1}.

    Subclasses decide how C^(n) is produced; the per-arity cache is
    append-only and filled under a lock.

    Args:
        k: Base-set size
        name: Identifier used in reports
        generators: Generating operations (may be empty for predicate clones
                    that only support membership questions)
        limits: Enumeration caps
    """

    def __init__(
        self,
        k: int,
        name: str,
        generators: Sequence[FiniteOp] = (),
        limits: Optional[EngineLimits] = None,
    ):
        for g in generators:
            if g.k != k:
                raise DomainError(f"generator {g} is not an operation on {k} elements")
        self.k = k
        self.name = name
        self.generators: Tuple[FiniteOp, ...] = tuple(generators)
        self.limits = limits or DEFAULT_LIMITS
        self._cache: Dict[int, np.ndarray] = {}
        self._lock = threading.Lock()
        self._subalgebras: Optional[List[Subalgebra]] = None
        self._isos: Optional[List[InternalIso]] = None

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r}, k={self.k})"

    # --- materialization -------------------------------------------------

    def member_matrix(self, n: int) -> np.ndarray:
        """
        C^(n) as a table matrix, rows sorted by operation code.
        """
        if n < 1:
            raise DomainError(f"arity must be at least 1, got {n}")
        self.limits.check_cells(self.k, n)
        with self._lock:
            if n not in self._cache:
                tables = self._materialize(n)
                order = np.argsort(matrix_codes(tables, self.k), kind="stable")
                tables = tables[order]
                tables.setflags(write=False)
                self._cache[n] = tables
                logger.info("%s: |C^(%d)| = %d", self.name, n, len(tables))
            return self._cache[n]

    def members(self, n: int) -> Tuple[FiniteOp, ...]:
        return ops_from_matrix(self.member_matrix(n), self.k, n)

    def _materialize(self, n: int) -> np.ndarray:
        raise NotImplementedError

    # --- membership ------------------------------------------------------

    def contains(self, f: FiniteOp) -> bool:
        if f.k != self.k:
            raise DomainError(f"operation on {f.k} elements tested against a clone on {self.k}")
        return bool(self.contains_mask(f.values[None, :], f.n)[0])

    def contains_mask(self, tables: np.ndarray, n: int) -> np.ndarray:
        raise NotImplementedError

    def is_discriminator(self) -> bool:
        return self.contains(discriminator(self.k))

    # --- subalgebras and internal isomorphisms ---------------------------

    def _require_generators(self) -> None:
        if not self.generators:
            raise UnsupportedCloneError(
                f"clone {self.name} has no generators; subalgebras and internal "
                f"isomorphisms cannot be computed"
            )

    def subalgebras(self) -> List[Subalgebra]:
        self._require_generators()
        if self._subalgebras is None:
            self._subalgebras = find_subalgebras(self.generators, self.k)
        return list(self._subalgebras)

    def internal_isos(self) -> List[InternalIso]:
        self._require_generators()
        if self._isos is None:
            self._isos = find_internal_isos(self.generators, self.k)
        return list(self._isos)

    def subuniverse(self, values) -> Subalgebra:
        """Subalgebra generated by a set of elements."""
        self._require_generators()
        return Subalgebra(tuple(sorted(close_subset(self.generators, self.k, values))))


class GeneratedClone(Clone):
    """
    The clone <F> generated by a finite set of operations.
    """

    def _materialize(self, n: int) -> np.ndarray:
        return generate_tables(self.generators, self.k, n)

    def is_discriminator(self) -> bool:
        t = discriminator(self.k)
        if t in self.generators:
            return True
        codes = matrix_codes(self.member_matrix(3), self.k)
        return bool(np.isin(t.code, codes))

    def contains_mask(self, tables: np.ndarray, n: int) -> np.ndarray:
        # with t among the generators the clone is exactly the set of
        # operations preserving its internal isomorphisms
        if discriminator(self.k) in self.generators:
            return isos_mask(tables, self.k, n, self.internal_isos())
        codes = matrix_codes(self.member_matrix(n), self.k)
        return np.isin(matrix_codes(tables, self.k), codes)


class PredicateClone(Clone):
    """
    A clone given by a membership predicate on tables.

    Args:
        k: Base-set size
        name: Identifier
        mask: Vectorized predicate (tables, k, n) -> bool array
        generators: Optional generating set, needed for subalgebras and
                    internal isomorphisms
        limits: Enumeration caps
    """

    def __init__(
        self,
        k: int,
        name: str,
        mask: Mask,
        generators: Sequence[FiniteOp] = (),
        limits: Optional[EngineLimits] = None,
    ):
        super().__init__(k, name, generators, limits)
        self.mask = mask

    def _materialize(self, n: int) -> np.ndarray:
        return enumerate_tables(self.mask, self.k, n, self.limits)

    def contains_mask(self, tables: np.ndarray, n: int) -> np.ndarray:
        return np.asarray(self.mask(tables, self.k, n), dtype=bool)


def generate_arity(clone: Clone, n: int) -> Tuple[FiniteOp, ...]:
    """
    The n-ary term operations of the generators of `clone`.

    Args:
        clone: A clone with generators
        n: Arity

    Returns:
        C^(n) sorted by operation code
    """
    if not isinstance(clone, GeneratedClone):
        clone._require_generators()
        clone.limits.check_cells(clone.k, n)
        return ops_from_matrix(generate_tables(clone.generators, clone.k, n), clone.k, n)
    return clone.members(n)


def enumerate_arity(clone: PredicateClone, n: int) -> Tuple[FiniteOp, ...]:
    """
    All n-ary operations satisfying the clone's predicate, sorted by code.
    """
    if not isinstance(clone, PredicateClone):
        raise UnsupportedCloneError(f"{clone.name} is not given by a predicate")
    return clone.members(n)


def contains(clone: Clone, f: FiniteOp) -> bool:
    return clone.contains(f)


def enumerate_tables(mask: Mask, k: int, n: int, limits: EngineLimits) -> np.ndarray:
    """Filters every n-ary table by `mask`, in chunks."""
    cells = k ** n
    total = k ** cells
    limits.check_budget(total)
    chunk = 1 << 16
    kept = []
    for start in range(0, total, chunk):
        codes = np.arange(start, min(start + chunk, total), dtype=np.int64)
        tables = table_matrix(k, n, codes)
        kept.append(tables[np.asarray(mask(tables, k, n), dtype=bool)])
    return np.concatenate(kept) if kept else np.zeros((0, cells), dtype=np.uint8)


def compose_product(
    g: FiniteOp, factors: Sequence[np.ndarray]
) -> Iterator[Tuple[int, np.ndarray]]:
    """
    Composes g with every tuple drawn from the product of `factors`.

    Args:
        g: m-ary operation
        factors: m table matrices of a common arity

    Yields:
        (row index in factors[0], tables) where tables[j] is g composed with
        factors[0][row] and the j-th tuple of the remaining factors in
        C order
    """
    k = g.k
    cells = factors[0].shape[1]
    rest = np.zeros((1, cells), dtype=np.int64)
    for factor in factors[1:]:
        rest = (rest[:, None, :] * k + factor[None, :, :].astype(np.int64)).reshape(-1, cells)
    weight = k ** (len(factors) - 1)
    values = g.values
    for row_index, row in enumerate(factors[0]):
        yield row_index, values[row.astype(np.int64)[None, :] * weight + rest]


def generate_tables(generators: Sequence[FiniteOp], k: int, n: int) -> np.ndarray:
    """
    Fixpoint closure of the n-ary projections under the generators.

    Semi-naive worklist: every round composes each generator with tuples
    that use at least one operation found in the previous round.
    """
    cells = k ** n
    start = np.array([p.values for p in projections(k, n)], dtype=np.uint8)
    known = set(int(c) for c in matrix_codes(start, k))
    total = start
    delta = start
    rounds = 0

    while len(delta):
        rounds += 1
        old = total[: len(total) - len(delta)]
        fresh: Dict[int, np.ndarray] = {}
        for g in generators:
            for position in range(g.n):
                factors = [old] * position + [delta] + [total] * (g.n - position - 1)
                if any(len(f) == 0 for f in factors):
                    continue
                for _, tables in compose_product(g, factors):
                    codes = matrix_codes(tables, k)
                    unique, first = np.unique(codes, return_index=True)
                    for code, index in zip(unique.tolist(), first.tolist()):
                        if code not in known and code not in fresh:
                            fresh[code] = tables[index]
        logger.debug("closure round %d: %d new %d-ary operations", rounds, len(fresh), n)
        known.update(fresh)
        delta = np.array(list(fresh.values()), dtype=np.uint8).reshape(-1, cells)
        total = np.concatenate([total, delta])

    return total


def restrict_clone(clone: Clone, subset) -> GeneratedClone:
    """
    C|_B: the clone on B obtained by restricting every operation of C.

    B must be preserved by every generator; elements are relabeled
    0..|B|-1 by increasing value.
    """
    clone._require_generators()
    labels = sorted(set(subset))
    for g in clone.generators:
        if not preserves_subset(g, labels):
            raise DomainError(f"generator {g} of {clone.name} does not preserve {set(labels)}")
    restricted = [restrict(g, labels) for g in clone.generators]
    return GeneratedClone(len(labels), f"{clone.name}|{labels}", restricted, clone.limits)
