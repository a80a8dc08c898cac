"""
Module counting blocks and symmetry classes for the arity bound.

Every operation on a k-element set is D-equivalent to a d-ary one for
d = k^k - k^(k-1) + 1, because for each breadth r from 2 to k the number
N(k, r) of symmetry classes of functions P_r -> A does not exceed the
number S(d, r) of breadth-r blocks of A^d.
"""

import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from scipy.special import comb, factorial

from clone_minors.errors import CapExceededError, DomainError
from clone_minors.operations import matrix_codes, tuple_matrix
from clone_minors.bounds.breadth import block_size, injective_tuples

logger = logging.getLogger(__name__)

EXPLICIT_COUNT_CAP = 10 ** 6


@lru_cache(maxsize=None)
def stirling(d: int, r: int) -> int:
    """
    Stirling number of the second kind: partitions of a d-set into r blocks.
    Also the number of breadth-r blocks of A^d whenever k >= r.
    """
    if d < 0 or r < 0:
        raise DomainError(f"Stirling numbers need d, r >= 0, got ({d}, {r})")
    table = [1] + [0] * r
    for i in range(1, d + 1):
        # S(i, j) = j S(i-1, j) + S(i-1, j-1), updated in place right to left
        for j in range(min(i, r), 0, -1):
            table[j] = j * table[j] + table[j - 1]
        table[0] = 0
    return table[r]


def stirling_inclusion_exclusion(d: int, r: int) -> int:
    """Independent closed form: sum_j (-1)^j C(r, j) (r - j)^d / r!."""
    total = sum(
        (-1) ** j * int(comb(r, j, exact=True)) * (r - j) ** d
        for j in range(r + 1)
    )
    return total // int(factorial(r, exact=True))


def lower_bound_stirling(d: int, r: int) -> int:
    """r^(d-r), a lower bound for S(d, r) when 1 <= r <= d."""
    if not 1 <= r <= d:
        raise DomainError(f"need 1 <= r <= d, got r={r}, d={d}")
    return r ** (d - r)


def bound_arity(k: int) -> int:
    return k ** k - k ** (k - 1) + 1


@lru_cache(maxsize=None)
def sigma_actions(k: int, r: int) -> Tuple[np.ndarray, ...]:
    """
    For every sigma in S_r, the index map i -> index of sigma*(x_i) in P_r,
    where sigma*(x_1, ..., x_r) = (x_sigma(1), ..., x_sigma(r)).
    """
    points = injective_tuples(k, r)
    index = {p: i for i, p in enumerate(points)}
    actions = []
    for sigma in itertools.permutations(range(r)):
        actions.append(np.array([index[tuple(p[s] for s in sigma)] for p in points], dtype=np.int64))
    return tuple(actions)


def canonical_form(phi: Sequence[int], k: int, r: int) -> Tuple[int, ...]:
    """
    Least member of the orbit of phi: P_r -> A under phi -> phi o sigma*.

    Args:
        phi: Values of phi on P_r in lexicographic order
        k: Base-set size
        r: Breadth
    """
    values = np.asarray(phi, dtype=np.int64)
    if len(values) != block_size(k, r):
        raise DomainError(f"a function on P_{r} needs {block_size(k, r)} values, got {len(values)}")
    return min(tuple(values[action].tolist()) for action in sigma_actions(k, r))


def approx_equiv(phi: Sequence[int], psi: Sequence[int], k: int, r: int) -> bool:
    """phi = psi o sigma* for some sigma in S_r."""
    return canonical_form(phi, k, r) == canonical_form(psi, k, r)


def _cycle_count(action: np.ndarray) -> int:
    seen = np.zeros(len(action), dtype=bool)
    cycles = 0
    for start in range(len(action)):
        if seen[start]:
            continue
        cycles += 1
        i = start
        while not seen[i]:
            seen[i] = True
            i = action[i]
    return cycles


def count_N(k: int, r: int, method: str = "burnside") -> int:
    """
    Number of symmetry classes of functions P_r -> A.

    Args:
        k: Base-set size
        r: Breadth, 1 <= r <= k
        method: "burnside" (orbit-counting lemma) or "explicit"
                (canonicalize every function)

    Returns:
        N(k, r)
    """
    if not 1 <= r <= k:
        raise DomainError(f"breadth {r} is not in 1..{k}")
    actions = sigma_actions(k, r)
    if method == "burnside":
        fixed = sum(k ** _cycle_count(action) for action in actions)
        return fixed // len(actions)
    if method != "explicit":
        raise DomainError(f"unknown counting method {method!r}")

    cells = block_size(k, r)
    total = k ** cells
    if total > EXPLICIT_COUNT_CAP:
        raise CapExceededError("explicit orbit count is too large", EXPLICIT_COUNT_CAP, total)
    functions = tuple_matrix(k, cells)
    codes = np.stack([matrix_codes(functions[:, action], k) for action in actions])
    return len(np.unique(codes.min(axis=0)))


@dataclass(frozen=True)
class BoundRow:
    r: int
    N: int
    S: int

    @property
    def ok(self) -> bool:
        return self.N <= self.S


@dataclass
class BoundReport:
    """
    The counting inequalities behind the arity bound for one k.

    Attributes:
        k: Base-set size
        d: k^k - k^(k-1) + 1
        rows: One row per breadth r = 2..k
        chain: For k >= 3, r -> (k^(k!), r^(d-r)) from the chain
               N(k, r) <= k^(k!) <= r^(d-r) <= S(d, r)
    """
    k: int
    d: int
    rows: List[BoundRow]
    chain: Dict[int, Tuple[int, int]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        if not all(row.ok for row in self.rows):
            return False
        for row in self.rows:
            if row.r in self.chain:
                crude, lower = self.chain[row.r]
                if not row.N <= crude <= lower <= row.S:
                    return False
        return True

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "d": self.d,
            "rows": [{"r": row.r, "N": row.N, "S": row.S, "ok": row.ok} for row in self.rows],
        }

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame(
            [{"r": row.r, "N": row.N, "S": row.S, "ok": row.ok} for row in self.rows],
            columns=["r", "N", "S", "ok"],
        )
        if self.chain:
            frame["k^(k!)"] = [self.chain[r][0] for r in frame["r"]]
            frame["r^(d-r)"] = [self.chain[r][1] for r in frame["r"]]
        return frame


def check_bound(k: int, d: Optional[int] = None) -> BoundReport:
    """
    Verifies N(k, r) <= S(d, r) for 2 <= r <= k.

    Args:
        k: Base-set size, 2..4
        d: Target arity (default k^k - k^(k-1) + 1)

    Returns:
        BoundReport
    """
    if not 2 <= k <= 4:
        raise DomainError(f"bound verification supports 2 <= k <= 4, got {k}")
    d = bound_arity(k) if d is None else d
    rows = [BoundRow(r, count_N(k, r), stirling(d, r)) for r in range(2, k + 1)]
    chain = {}
    if k >= 3 and d == bound_arity(k):
        crude = k ** int(factorial(k, exact=True))
        chain = {row.r: (crude, lower_bound_stirling(d, row.r)) for row in rows}
    report = BoundReport(k, d, rows, chain)
    logger.info("bound check k=%d d=%d: %s", k, d, "ok" if report.ok else "FAILED")
    return report
