"""
Module with finitary operations on {0, ..., k-1} stored as truth tables.

Tuples are encoded big-endian mixed radix: a_1 is the most significant digit,
so the table of a Boolean operation reads as its usual truth-table string.
"""

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence, Tuple, FrozenSet, Optional

import numpy as np

from clone_minors.errors import DomainError


@dataclass(frozen=True)
class FiniteOp:
    """
    An n-ary operation on {0, ..., k-1}.

    Args:
        k: Base-set size (at least 2)
        n: Arity (at least 1; constants are unary)
        table: k^n bytes, entry enc(a) holds f(a)
    """
    k: int
    n: int
    table: bytes

    def __post_init__(self):
        if self.k < 2:
            raise DomainError(f"base-set size must be at least 2, got {self.k}")
        if self.n < 1:
            raise DomainError(f"arity must be at least 1, got {self.n}")
        if len(self.table) != self.k ** self.n:
            raise DomainError(
                f"table of a {self.n}-ary operation on {self.k} elements needs "
                f"{self.k ** self.n} entries, got {len(self.table)}"
            )
        if self.table and max(self.table) >= self.k:
            raise DomainError(f"table entry {max(self.table)} is not below k={self.k}")

    @classmethod
    def from_values(cls, k: int, n: int, values: Iterable[int]) -> "FiniteOp":
        values = [int(v) for v in values]
        if any(v < 0 or v >= k for v in values):
            raise DomainError(f"table entries must lie in 0..{k - 1}")
        return cls(k, n, bytes(values))

    @classmethod
    def from_code(cls, k: int, n: int, code: int) -> "FiniteOp":
        """Inverse of the `code` property."""
        cells = k ** n
        if code < 0 or code >= k ** cells:
            raise DomainError(f"code {code} out of range for {n}-ary operations on {k} elements")
        digits = []
        for _ in range(cells):
            code, digit = divmod(code, k)
            digits.append(digit)
        return cls(k, n, bytes(reversed(digits)))

    @property
    def values(self) -> np.ndarray:
        """Read-only numpy view of the table."""
        return np.frombuffer(self.table, dtype=np.uint8)

    @property
    def code(self) -> int:
        """
        The table read as a base-k number with the first entry most significant.
        For k = 2 this is the bit-packed truth table.
        """
        return reduce(lambda acc, v: acc * self.k + v, self.table, 0)

    def sort_key(self) -> Tuple[int, bytes]:
        # minimal arity first, then lexicographically least table
        return (self.n, self.table)

    @property
    def text(self) -> str:
        return format_op(self)

    def __call__(self, *args: int) -> int:
        return apply(self, args)

    def __str__(self) -> str:
        return self.text


def enc(values: Sequence[int], k: int) -> int:
    """
    Encodes a tuple over {0, ..., k-1} as an integer code.

    Args:
        values: The tuple (a_1, ..., a_n), n >= 1
        k: Base-set size

    Returns:
        sum(a_i * k^(n-i)) with a_1 most significant
    """
    if len(values) == 0:
        raise DomainError("tuples must have length at least 1")
    code = 0
    for v in values:
        if v < 0 or v >= k:
            raise DomainError(f"tuple entry {v} is not in 0..{k - 1}")
        code = code * k + v
    return code


def dec(code: int, k: int, n: int) -> Tuple[int, ...]:
    """
    Decodes an integer code into an n-tuple.

    Args:
        code: Integer in 0..k^n-1
        k: Base-set size
        n: Tuple length

    Returns:
        Tuple (a_1, ..., a_n)
    """
    if code < 0 or code >= k ** n:
        raise DomainError(f"code {code} is not in 0..{k ** n - 1}")
    digits = []
    for _ in range(n):
        code, digit = divmod(code, k)
        digits.append(digit)
    return tuple(reversed(digits))


def tuple_matrix(k: int, n: int) -> np.ndarray:
    """All tuples of A^n as a (k^n, n) array in code order."""
    codes = np.arange(k ** n, dtype=np.int64)
    powers = k ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return ((codes[:, None] // powers[None, :]) % k).astype(np.uint8)


def apply(f: FiniteOp, a: Sequence[int]) -> int:
    if len(a) != f.n:
        raise DomainError(f"{f.n}-ary operation applied to {len(a)} arguments")
    return f.table[enc(a, f.k)]


def projection(k: int, n: int, i: int) -> FiniteOp:
    """
    The i-th n-ary projection p_i^(n) (i is 1-based).
    """
    if not 1 <= i <= n:
        raise DomainError(f"projection index {i} not in 1..{n}")
    column = tuple_matrix(k, n)[:, i - 1]
    return FiniteOp(k, n, column.tobytes())


def projections(k: int, n: int) -> Tuple[FiniteOp, ...]:
    return tuple(projection(k, n, i) for i in range(1, n + 1))


def constant(k: int, value: int, n: int = 1) -> FiniteOp:
    if not 0 <= value < k:
        raise DomainError(f"constant {value} not in 0..{k - 1}")
    return FiniteOp(k, n, bytes([value]) * (k ** n))


def identity(k: int) -> FiniteOp:
    return projection(k, 1, 1)


def compose(g: FiniteOp, hs: Sequence[FiniteOp]) -> FiniteOp:
    """
    Composes g with the tuple hs = (h_1, ..., h_m).

    Args:
        g: m-ary operation
        hs: m operations of a common arity n over the same base as g

    Returns:
        The n-ary operation a -> g(h_1(a), ..., h_m(a))
    """
    if len(hs) != g.n:
        raise DomainError(f"{g.n}-ary operation composed with {len(hs)} operations")
    n = hs[0].n
    for h in hs:
        if h.k != g.k:
            raise DomainError(f"base mismatch: {h.k} vs {g.k}")
        if h.n != n:
            raise DomainError(f"inner operations must share one arity, got {h.n} and {n}")

    index = np.zeros(g.k ** n, dtype=np.int64)
    for h in hs:
        index = index * g.k + h.values
    return FiniteOp(g.k, n, g.values[index].tobytes())


def image(f: FiniteOp) -> FrozenSet[int]:
    return frozenset(f.table)


def restrict(f: FiniteOp, subset: Iterable[int]) -> FiniteOp:
    """
    Restricts f to B^n for a subset B it preserves.

    B is relabeled to 0..|B|-1 by increasing original value.

    Args:
        f: Operation on {0, ..., k-1}
        subset: Subset B with at least two elements, so that f|_B is
            again an operation on a base of size at least 2

    Returns:
        f|_B as an operation on a |B|-element base
    """
    labels = sorted(set(subset))
    if not labels:
        raise DomainError("cannot restrict to the empty set")
    if labels[0] < 0 or labels[-1] >= f.k:
        raise DomainError(f"subset {labels} is not inside 0..{f.k - 1}")
    if len(labels) < 2:
        raise DomainError("restriction needs at least two elements to stay a FiniteOp")

    relabel = {v: i for i, v in enumerate(labels)}
    b = len(labels)
    out = bytearray(b ** f.n)
    for code in range(b ** f.n):
        inner = tuple(labels[x] for x in dec(code, b, f.n))
        value = f.table[enc(inner, f.k)]
        if value not in relabel:
            raise DomainError(f"operation does not preserve {set(labels)}: f{inner} = {value}")
        out[code] = relabel[value]
    return FiniteOp(b, f.n, bytes(out))


def preserves_subset(f: FiniteOp, subset: Iterable[int]) -> bool:
    members = sorted(set(subset))
    allowed = np.zeros(f.k, dtype=bool)
    allowed[members] = True
    inside = allowed[tuple_matrix(f.k, f.n)].all(axis=1)
    return bool(allowed[f.values[inside]].all())


def pad_arity(f: FiniteOp, d: int) -> FiniteOp:
    """
    Adds fictitious variables: f*(a_1, ..., a_d) = f(a_1, ..., a_n).
    """
    if d < f.n:
        raise DomainError(f"cannot pad a {f.n}-ary operation down to arity {d}")
    return FiniteOp(f.k, d, np.repeat(f.values, f.k ** (d - f.n)).tobytes())


def essential_arity(f: FiniteOp) -> int:
    """Number of variables f actually depends on."""
    cube = f.values.reshape((f.k,) * f.n)
    return sum(
        1 for axis in range(f.n)
        if np.any(cube.max(axis=axis) != cube.min(axis=axis))
    )


def discriminator(k: int) -> FiniteOp:
    """t(x, y, z) = z if x = y, else x."""
    if k < 2:
        raise DomainError(f"discriminator needs k >= 2, got {k}")
    rows = tuple_matrix(k, 3)
    values = np.where(rows[:, 0] == rows[:, 1], rows[:, 2], rows[:, 0])
    return FiniteOp(k, 3, values.astype(np.uint8).tobytes())


def xor_chain(n: int) -> FiniteOp:
    """f_n(x_1, ..., x_n) = x_1 + ... + x_n over GF(2)."""
    if n < 1:
        raise DomainError(f"arity must be at least 1, got {n}")
    parity = tuple_matrix(2, n).sum(axis=1) % 2
    return FiniteOp(2, n, parity.astype(np.uint8).tobytes())


def negation() -> FiniteOp:
    return FiniteOp(2, 1, bytes([1, 0]))


def boolean_and() -> FiniteOp:
    return FiniteOp(2, 2, bytes([0, 0, 0, 1]))


def boolean_or() -> FiniteOp:
    return FiniteOp(2, 2, bytes([0, 1, 1, 1]))


def dual(f: FiniteOp) -> FiniteOp:
    """
    The dual of a Boolean operation: f^d(a) = not f(not a).
    """
    if f.k != 2:
        raise DomainError("duals are defined for Boolean operations only")
    # complementing every coordinate reverses the code order
    return FiniteOp(2, f.n, (1 - f.values[::-1]).tobytes())


def table_matrix(k: int, n: int, codes: Optional[np.ndarray] = None) -> np.ndarray:
    """
    Tables of n-ary operations as rows of a matrix.

    Args:
        k: Base-set size
        n: Arity
        codes: Operation codes to unpack (default: every operation)

    Returns:
        uint8 array of shape (len(codes), k^n)
    """
    cells = k ** n
    if codes is None:
        codes = np.arange(k ** cells, dtype=np.int64)
    codes = np.asarray(codes, dtype=np.int64)
    if k == 2:
        # bit-packed: bit (cells-1-j) of the code is entry j
        shifts = np.arange(cells - 1, -1, -1, dtype=np.int64)
        return ((codes[:, None] >> shifts[None, :]) & 1).astype(np.uint8)
    powers = k ** np.arange(cells - 1, -1, -1, dtype=np.int64)
    return ((codes[:, None] // powers[None, :]) % k).astype(np.uint8)


def matrix_codes(tables: np.ndarray, k: int) -> np.ndarray:
    """Inverse of table_matrix: one int64 code per row."""
    cells = tables.shape[1]
    powers = k ** np.arange(cells - 1, -1, -1, dtype=np.int64)
    return tables.astype(np.int64) @ powers


def ops_from_matrix(tables: np.ndarray, k: int, n: int) -> Tuple[FiniteOp, ...]:
    return tuple(FiniteOp(k, n, row.astype(np.uint8).tobytes()) for row in tables)


def format_op(f: FiniteOp) -> str:
    """
    Text form "k:n:digits"; one digit per entry for k <= 10,
    comma-separated entries above that.
    """
    if f.k <= 10:
        body = "".join(str(v) for v in f.table)
    else:
        body = ",".join(str(v) for v in f.table)
    return f"{f.k}:{f.n}:{body}"
