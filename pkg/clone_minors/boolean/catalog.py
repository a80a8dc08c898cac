"""
Module for classifying Boolean operations under the six discriminator
clones O, T0, T1, Tid, S, D.

For a Boolean discriminator clone C the relation f <=_C g reduces to
three checks: matching value at the all-zero tuple when C is inside T0,
matching value at the all-one tuple when C is inside T1, and inclusion of
the families Im^[d](f) in Im^[d](g), where d = 2 for clones inside S and
d = 1 otherwise.
"""

from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Optional, Union

import networkx as nx
import numpy as np

from clone_minors.errors import DomainError
from clone_minors.operations import FiniteOp


class BooleanCloneId(str, Enum):
    O = "O"
    T0 = "T0"
    T1 = "T1"
    TID = "Tid"
    S = "S"
    D = "D"


CloneLike = Union[str, BooleanCloneId]

# covering pairs (smaller, larger) of the inclusion order
INCLUSION_COVERS = (
    ("D", "Tid"),
    ("D", "S"),
    ("Tid", "T0"),
    ("Tid", "T1"),
    ("T0", "O"),
    ("T1", "O"),
    ("S", "O"),
)

INCLUSION_ORDER = nx.DiGraph(INCLUSION_COVERS)

Family = FrozenSet[FrozenSet[int]]

# bit of each member set in a family mask
_BITS = {frozenset({0}): 1, frozenset({1}): 2, frozenset({0, 1}): 4}
_MEMBER_TEXT = {frozenset({0}): "0", frozenset({1}): "1", frozenset({0, 1}): "01"}


def clone_id(value: CloneLike) -> BooleanCloneId:
    try:
        return BooleanCloneId(value)
    except ValueError:
        raise DomainError(
            f"{value!r} is not a Boolean discriminator clone; expected one of "
            f"{', '.join(c.value for c in BooleanCloneId)}"
        ) from None


def is_subclone(smaller: CloneLike, larger: CloneLike) -> bool:
    """Inclusion among the six clones."""
    a, b = clone_id(smaller).value, clone_id(larger).value
    return a == b or nx.has_path(INCLUSION_ORDER, a, b)


def d_c(cid: CloneLike) -> int:
    """Size of the ~_C blocks: 2 for clones inside S, 1 otherwise."""
    return 2 if is_subclone(cid, BooleanCloneId.S) else 1


def uses_zero(cid: CloneLike) -> bool:
    return is_subclone(cid, BooleanCloneId.T0)


def uses_one(cid: CloneLike) -> bool:
    return is_subclone(cid, BooleanCloneId.T1)


def _require_boolean(f: FiniteOp) -> None:
    if f.k != 2:
        raise DomainError(f"Boolean operation expected, got one on {f.k} elements")


def im1(f: FiniteOp) -> Family:
    _require_boolean(f)
    return frozenset(frozenset({v}) for v in f.table)


def im2(f: FiniteOp) -> Family:
    """
    The sets {f(a), f(not a)} over all inputs a.
    """
    _require_boolean(f)
    values = f.values
    # complementing every coordinate reverses the code order
    return frozenset(
        frozenset({int(x), int(y)}) for x, y in zip(values, values[::-1])
    )


def im_family(f: FiniteOp, d: int) -> Family:
    return im2(f) if d == 2 else im1(f)


def boolean_minor(f: FiniteOp, g: FiniteOp, cid: CloneLike) -> bool:
    """
    Tells whether f <=_C g for a Boolean discriminator clone C.

    Args:
        f: Boolean operation
        g: Boolean operation
        cid: One of O, T0, T1, Tid, S, D

    Returns:
        True if f is a C-minor of g
    """
    _require_boolean(f)
    _require_boolean(g)
    cid = clone_id(cid)
    if uses_zero(cid) and f.table[0] != g.table[0]:
        return False
    if uses_one(cid) and f.table[-1] != g.table[-1]:
        return False
    d = d_c(cid)
    return im_family(f, d) <= im_family(g, d)


@dataclass(frozen=True)
class ClassLabel:
    """
    Name of a C-equivalence class of Boolean operations.

    Args:
        clone: The clone the label refers to
        a: f(0...0), or None when the clone does not fix it
        b: f(1...1), or None when the clone does not fix it
        family: Im^[d](f) for d = d_C
    """
    clone: BooleanCloneId
    a: Optional[int]
    b: Optional[int]
    family: Family

    def __post_init__(self):
        if not self.family:
            raise DomainError("a class label needs a nonempty family")
        if d_c(self.clone) == 2 and self.a is not None and self.b is not None:
            if frozenset({self.a, self.b}) not in self.family:
                raise DomainError(f"{{{self.a},{self.b}}} must belong to the family of {self.text}")

    @property
    def key(self) -> int:
        mask = sum(_BITS[member] for member in self.family)
        return mask + 8 * (self.a or 0) + 16 * (self.b or 0)

    @property
    def text(self) -> str:
        values = set().union(*self.family)
        if len(values) == 1:
            return f"[{values.pop()}]"
        if d_c(self.clone) == 2:
            members = sorted(self.family, key=lambda m: _BITS[m])
            body = "F{" + ",".join(_MEMBER_TEXT[m] for m in members) + "}"
            if self.a is not None:
                body += f"^{{{self.a}{self.b}}}"
            return body
        a = "*" if self.a is None else str(self.a)
        b = "*" if self.b is None else str(self.b)
        if self.a is None and self.b is None:
            return "N"
        return f"N^{{{a}{b}}}"

    def __str__(self) -> str:
        return self.text

    @classmethod
    def from_key(cls, cid: CloneLike, key: int) -> "ClassLabel":
        cid = clone_id(cid)
        family = frozenset(m for m, bit in _BITS.items() if key & bit)
        a = (key >> 3) & 1 if uses_zero(cid) else None
        b = (key >> 4) & 1 if uses_one(cid) else None
        return cls(cid, a, b, family)


def class_label(f: FiniteOp, cid: CloneLike) -> ClassLabel:
    """
    The label of the C-equivalence class of f; equal labels mean equivalent
    operations.
    """
    _require_boolean(f)
    cid = clone_id(cid)
    a = f.table[0] if uses_zero(cid) else None
    b = f.table[-1] if uses_one(cid) else None
    return ClassLabel(cid, a, b, im_family(f, d_c(cid)))


def label_keys(tables: np.ndarray, cid: CloneLike) -> np.ndarray:
    """
    ClassLabel keys for every row of a Boolean table matrix.

    Args:
        tables: (N, 2^n) uint8 array
        cid: Clone id

    Returns:
        int64 array of length N
    """
    cid = clone_id(cid)
    tables = np.asarray(tables, dtype=np.uint8)
    if d_c(cid) == 2:
        flipped = tables[:, ::-1]
        low = np.minimum(tables, flipped)
        high = np.maximum(tables, flipped)
        has_zero = (high == 0).any(axis=1)
        has_one = (low == 1).any(axis=1)
        has_both = (low != high).any(axis=1)
    else:
        has_zero = (tables == 0).any(axis=1)
        has_one = (tables == 1).any(axis=1)
        has_both = np.zeros(len(tables), dtype=bool)

    keys = has_zero.astype(np.int64) + 2 * has_one + 4 * has_both
    if uses_zero(cid):
        keys += 8 * tables[:, 0].astype(np.int64)
    if uses_one(cid):
        keys += 16 * tables[:, -1].astype(np.int64)
    return keys


def label_minor(lower: ClassLabel, upper: ClassLabel) -> bool:
    """The order between classes, read off their labels."""
    if lower.clone != upper.clone:
        raise DomainError("labels of different clones are not comparable")
    return lower.a == upper.a and lower.b == upper.b and lower.family <= upper.family
