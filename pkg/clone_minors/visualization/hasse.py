"""
Module for exporting class posets as Hasse diagrams (DOT) and as JSON.
"""

import json
from typing import Optional

from clone_minors.minors.poset import Poset


def quote_id(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def poset_to_dict(poset: Poset) -> dict:
    """
    Plain-data form of a poset: nodes in key order, edges sorted by node order.
    """
    heights = poset.heights()
    return {
        "clone": poset.name,
        "nodes": [
            {
                "key": node.key,
                "label": node.label,
                "representative": node.representative.text,
                "height": heights[node.label],
            }
            for node in poset.nodes
        ],
        "edges": [list(edge) for edge in poset.edges],
    }


def poset_to_json(poset: Poset, indent: Optional[int] = 2) -> str:
    return json.dumps(poset_to_dict(poset), indent=indent, sort_keys=True)


def poset_to_dot(poset: Poset, title: Optional[str] = None) -> str:
    """
    Hasse diagram in DOT, smaller classes at the bottom.

    Args:
        poset: Classes and covering edges
        title: Graph label (default: the clone id)

    Returns:
        DOT source
    """
    title = poset.name if title is None else title
    lines = [
        f"digraph {quote_id(poset.name or 'poset')} {{",
        "  rankdir=BT;",
        f"  label={quote_id(title)};",
        "  node [shape=box];",
    ]
    for node in poset.nodes:
        lines.append(
            f"  {quote_id(node.label)} [tooltip={quote_id(node.representative.text)}];"
        )
    for lower, upper in poset.edges:
        lines.append(f"  {quote_id(lower)} -> {quote_id(upper)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
