"""
Module with the published class posets of the six Boolean discriminator
clones: labels, representatives and covering edges, stored verbatim as
fixtures.

Representatives are truth tables in the "2:n:digits" format; the formula
each one stands for is given alongside.
"""

from typing import Dict, List, Tuple, Union

from clone_minors.errors import DomainError
from clone_minors.parsing import parse_op
from clone_minors.operations import FiniteOp
from clone_minors.boolean.catalog import ClassLabel, CloneLike, class_label, clone_id
from clone_minors.minors.poset import Poset, PosetNode

# clone id -> [(label, formula, table)]
NODES: Dict[str, List[Tuple[str, str, str]]] = {
    "D": [
        ("[0]", "0", "2:1:00"),
        ("F{0,01}^{00}", "x y'", "2:2:0010"),
        ("F{0,1}^{00}", "x + y", "2:2:0110"),
        ("F{0,1,01}^{00}", "xy + z", "2:3:01010110"),
        ("F{01}^{01}", "x", "2:1:01"),
        ("F{0,01}^{01}", "xy", "2:2:0001"),
        ("F{1,01}^{01}", "x v y", "2:2:0111"),
        ("F{0,1,01}^{01}", "x y' + z", "2:3:01011001"),
        ("F{01}^{10}", "x'", "2:1:10"),
        ("F{0,01}^{10}", "x' y'", "2:2:1000"),
        ("F{1,01}^{10}", "x' v y'", "2:2:1110"),
        ("F{0,1,01}^{10}", "x y' + z'", "2:3:10100110"),
        ("[1]", "1", "2:1:11"),
        ("F{0,1}^{11}", "x + y'", "2:2:1001"),
        ("F{1,01}^{11}", "x' v y", "2:2:1101"),
        ("F{0,1,01}^{11}", "xy + z'", "2:3:10101001"),
    ],
    "S": [
        ("[0]", "0", "2:1:00"),
        ("F{01}", "x", "2:1:01"),
        ("[1]", "1", "2:1:11"),
        ("F{0,01}", "xy", "2:2:0001"),
        ("F{0,1}", "x + y", "2:2:0110"),
        ("F{1,01}", "x v y", "2:2:0111"),
        ("F{0,1,01}", "xy + z", "2:3:01010110"),
    ],
    "Tid": [
        ("[0]", "0", "2:1:00"),
        ("[1]", "1", "2:1:11"),
        ("N^{00}", "x + y", "2:2:0110"),
        ("N^{01}", "x", "2:1:01"),
        ("N^{10}", "x'", "2:1:10"),
        ("N^{11}", "x + y'", "2:2:1001"),
    ],
    "T0": [
        ("[0]", "0", "2:1:00"),
        ("[1]", "1", "2:1:11"),
        ("N^{0*}", "x", "2:1:01"),
        ("N^{1*}", "x'", "2:1:10"),
    ],
    "T1": [
        ("[0]", "0", "2:1:00"),
        ("[1]", "1", "2:1:11"),
        ("N^{*0}", "x'", "2:1:10"),
        ("N^{*1}", "x", "2:1:01"),
    ],
    "O": [
        ("[0]", "0", "2:1:00"),
        ("[1]", "1", "2:1:11"),
        ("N", "x", "2:1:01"),
    ],
}


def _diamond(bottom: str, left: str, right: str, top: str) -> List[Tuple[str, str]]:
    return [(bottom, left), (bottom, right), (left, top), (right, top)]


EDGES: Dict[str, List[Tuple[str, str]]] = {
    "D": (
        _diamond("[0]", "F{0,01}^{00}", "F{0,1}^{00}", "F{0,1,01}^{00}")
        + _diamond("F{01}^{01}", "F{0,01}^{01}", "F{1,01}^{01}", "F{0,1,01}^{01}")
        + _diamond("F{01}^{10}", "F{0,01}^{10}", "F{1,01}^{10}", "F{0,1,01}^{10}")
        + _diamond("[1]", "F{0,1}^{11}", "F{1,01}^{11}", "F{0,1,01}^{11}")
    ),
    "S": [
        ("[0]", "F{0,01}"),
        ("[0]", "F{0,1}"),
        ("F{01}", "F{0,01}"),
        ("F{01}", "F{1,01}"),
        ("[1]", "F{0,1}"),
        ("[1]", "F{1,01}"),
        ("F{0,01}", "F{0,1,01}"),
        ("F{0,1}", "F{0,1,01}"),
        ("F{1,01}", "F{0,1,01}"),
    ],
    "Tid": [("[0]", "N^{00}"), ("[1]", "N^{11}")],
    "T0": [("[0]", "N^{0*}"), ("[1]", "N^{1*}")],
    "T1": [("[0]", "N^{*0}"), ("[1]", "N^{*1}")],
    "O": [("[0]", "N"), ("[1]", "N")],
}


def expected_poset(cid: CloneLike) -> Poset:
    """
    The published poset of C-equivalence classes.

    Node keys are the ClassLabel keys of the representatives, so the
    node order matches computed posets.
    """
    cid = clone_id(cid)
    nodes = []
    for label, _, table in NODES[cid.value]:
        op = parse_op(table)
        nodes.append(PosetNode(class_label(op, cid).key, label, op))
    return Poset(nodes, EDGES[cid.value], cid.value)


def formula(label: str, cid: CloneLike) -> str:
    cid = clone_id(cid)
    for text, expression, _ in NODES[cid.value]:
        if text == label:
            return expression
    raise DomainError(f"no class labeled {label!r} for {cid.value}")


def representative(label: Union[str, ClassLabel], cid: CloneLike) -> FiniteOp:
    """
    The published representative of a class.

    Args:
        label: Label text such as "F{0,01}^{10}", or a ClassLabel
        cid: Clone id

    Returns:
        FiniteOp
    """
    cid = clone_id(cid)
    text = label.text if isinstance(label, ClassLabel) else label
    for name, _, table in NODES[cid.value]:
        if name == text:
            return parse_op(table)
    raise DomainError(f"no class labeled {text!r} for {cid.value}")
