"""
Main module with the CloneMinors class for working with one clone.
"""

from typing import Optional, Union

import pandas as pd

from clone_minors.config import EngineLimits, load_limits
from clone_minors.errors import UnsupportedCloneError
from clone_minors.operations import FiniteOp
from clone_minors.parsing import parse_op
from clone_minors.clones.engine import Clone
from clone_minors.clones.registry import get_clone
from clone_minors.boolean.catalog import BooleanCloneId, ClassLabel, class_label
from clone_minors.boolean.figures import expected_poset, representative
from clone_minors.minors.decide import MinorResult, boolean_clone_id, equivalent, minor
from clone_minors.minors.classes import class_frame, enumerate_classes
from clone_minors.minors.poset import Poset
from clone_minors.minors.nu import NuMap, nu_map
from clone_minors.bounds.counting import BoundReport, check_bound
from clone_minors.bounds.reduction import reduce_to_d_ary
from clone_minors.bounds.witnesses import witness_matrix
from clone_minors.visualization.hasse import poset_to_dot, poset_to_json

OpLike = Union[str, FiniteOp]


def _op(value: OpLike) -> FiniteOp:
    return value if isinstance(value, FiniteOp) else parse_op(value)


class CloneMinors:
    """
    Front object for minor questions relative to one clone.

    Operations may be passed as FiniteOp objects or in the "k:n:digits"
    text format.
    """

    def __init__(self, clone: str = "D", k: int = 2, limits: Optional[EngineLimits] = None):
        """
        Resolves the clone and the enumeration limits.

        Args:
            clone: Clone id (O, T0, T1, Tid, S, D, M, L, R0, R1, E, K or "gen:...")
            k: Base-set size for named clones
            limits: Enumeration caps (default: environment, then built-in)
        """
        self.limits = limits if limits else load_limits()
        self.clone_id = clone
        self.clone: Clone = get_clone(clone, k, self.limits)
        self.k = self.clone.k

    def __repr__(self) -> str:
        return f"CloneMinors({self.clone_id!r}, k={self.k})"

    def minor(self, f: OpLike, g: OpLike, method: str = "auto") -> MinorResult:
        """
        Decides whether f is a minor of g relative to the clone.

        Args:
            f: Operation
            g: Operation
            method: "auto", "decide" or "brute"

        Returns:
            MinorResult (truthy when the relation holds)
        """
        return minor(_op(f), _op(g), self.clone, method)

    def equivalent(self, f: OpLike, g: OpLike, method: str = "auto") -> bool:
        return equivalent(_op(f), _op(g), self.clone, method)

    def classify(self, f: OpLike) -> ClassLabel:
        """
        Class label of f. Only for the six Boolean discriminator clones.
        """
        return class_label(_op(f), self._boolean_id())

    def representative(self, f: OpLike) -> FiniteOp:
        """The published representative of the class of f."""
        cid = self._boolean_id()
        return representative(class_label(_op(f), cid), cid)

    def classes(self, max_arity: int = 3, method: str = "auto") -> Poset:
        return enumerate_classes(self.clone, max_arity, method)

    def class_table(self, max_arity: int = 3) -> pd.DataFrame:
        return class_frame(self.classes(max_arity))

    def expected_classes(self) -> Poset:
        return expected_poset(self._boolean_id())

    def hasse(self, max_arity: int = 3, fmt: str = "dot") -> str:
        """
        The computed class poset as DOT or JSON text.
        """
        poset = self.classes(max_arity)
        return poset_to_dot(poset) if fmt == "dot" else poset_to_json(poset)

    def nu(self, larger: "CloneMinors", max_arity: int = 3) -> NuMap:
        """Natural map from the classes of this clone to those of `larger`."""
        return nu_map(self.clone, larger.clone, self.classes(max_arity), larger.classes(max_arity))

    def reduce(self, f: OpLike, d: int = 3, verify: Optional[str] = "decide") -> FiniteOp:
        return reduce_to_d_ary(_op(f), d, verify, self.limits)

    def check_bound(self) -> BoundReport:
        return check_bound(self.k)

    def witness(self, max_arity: int = 3) -> pd.DataFrame:
        return witness_matrix(self.clone_id, max_arity, self.limits)

    def _boolean_id(self) -> BooleanCloneId:
        cid = boolean_clone_id(self.clone)
        if cid is None:
            raise UnsupportedCloneError(f"{self.clone_id} is not a Boolean discriminator clone")
        return cid
