"""
Module enumerating C-equivalence classes and building their poset.
"""

import logging
from typing import Dict, List

import numpy as np
import pandas as pd

from clone_minors.errors import DomainError
from clone_minors.operations import FiniteOp, table_matrix
from clone_minors.boolean.catalog import ClassLabel, label_keys, label_minor
from clone_minors.clones.engine import Clone
from clone_minors.minors.decide import boolean_clone_id, all_ops, equivalent, minor
from clone_minors.minors.poset import Poset, PosetNode

logger = logging.getLogger(__name__)


def _boolean_classes(clone: Clone, max_arity: int) -> Poset:
    cid = boolean_clone_id(clone)
    found: Dict[int, FiniteOp] = {}
    for n in range(1, max_arity + 1):
        clone.limits.check_cells(2, n)
        clone.limits.check_budget(2 ** (2 ** n))
        tables = table_matrix(2, n)
        keys, first = np.unique(label_keys(tables, cid), return_index=True)
        for key, index in zip(keys.tolist(), first.tolist()):
            if key not in found:
                found[key] = FiniteOp(2, n, tables[index].tobytes())
        logger.info("%s: %d classes met up to arity %d", clone.name, len(found), n)

    labels = {key: ClassLabel.from_key(cid, key) for key in found}
    nodes = [PosetNode(key, labels[key].text, found[key]) for key in found]
    return Poset.from_order(
        nodes,
        lambda lower, upper: label_minor(labels[lower.key], labels[upper.key]),
        clone.name,
    )


def _general_classes(clone: Clone, max_arity: int, method: str) -> Poset:
    clone.limits.check_cells(clone.k, max_arity)
    clone.limits.check_budget(sum(clone.k ** (clone.k ** n) for n in range(1, max_arity + 1)))
    representatives: List[FiniteOp] = []
    for f in all_ops(clone.k, max_arity):
        if not any(equivalent(f, rep, clone, method) for rep in representatives):
            representatives.append(f)
    logger.info("%s: %d classes met up to arity %d", clone.name, len(representatives), max_arity)

    nodes = [PosetNode(i, rep.text, rep) for i, rep in enumerate(representatives)]
    return Poset.from_order(
        nodes,
        lambda lower, upper: bool(minor(lower.representative, upper.representative, clone, method)),
        clone.name,
    )


def enumerate_classes(clone: Clone, max_arity: int, method: str = "auto") -> Poset:
    """
    All C-equivalence classes meeting arities 1..max_arity, with the
    covering relation of the induced order.

    Args:
        clone: Clone
        max_arity: Largest arity scanned
        method: Minor test used outside the Boolean fast path

    Returns:
        Poset whose representatives have minimal arity and the least table
    """
    if max_arity < 1:
        raise DomainError(f"max arity must be at least 1, got {max_arity}")
    if method == "auto" and boolean_clone_id(clone) is not None:
        return _boolean_classes(clone, max_arity)
    return _general_classes(clone, max_arity, method)


def class_frame(poset: Poset) -> pd.DataFrame:
    """
    One row per class: label, representative, its arity and height.
    """
    heights = poset.heights()
    rows = [
        {
            "label": node.label,
            "representative": node.representative.text,
            "arity": node.representative.n,
            "height": heights[node.label],
        }
        for node in poset.nodes
    ]
    return pd.DataFrame(rows, columns=["label", "representative", "arity", "height"])
