"""
Module for drawing the natural map between the class posets of two
nested clones side by side.
"""

from typing import Dict

from clone_minors.minors.poset import Poset
from clone_minors.visualization.hasse import quote_id


def nu_to_dot(nu: Dict[str, str], poset_sub: Poset, poset_sup: Poset) -> str:
    """
    Two Hasse diagrams in clusters with dashed arrows for the map.

    Args:
        nu: Map from labels of poset_sub to labels of poset_sup
        poset_sub: Classes of the smaller clone
        poset_sup: Classes of the larger clone

    Returns:
        DOT source
    """
    def node_id(poset: Poset, label: str) -> str:
        return quote_id(f"{poset.name}:{label}")

    lines = [
        f"digraph {quote_id(f'nu_{poset_sup.name}_{poset_sub.name}')} {{",
        "  rankdir=BT;",
        "  node [shape=box];",
    ]
    for index, poset in enumerate((poset_sub, poset_sup)):
        lines.append(f"  subgraph cluster_{index} {{")
        lines.append(f"    label={quote_id(poset.name)};")
        for node in poset.nodes:
            lines.append(f"    {node_id(poset, node.label)} [label={quote_id(node.label)}];")
        for lower, upper in poset.edges:
            lines.append(f"    {node_id(poset, lower)} -> {node_id(poset, upper)};")
        lines.append("  }")

    for node in poset_sub.nodes:
        lines.append(
            f"  {node_id(poset_sub, node.label)} -> {node_id(poset_sup, nu[node.label])} "
            f"[style=dashed, constraint=false];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def nu_rows(nu: Dict[str, str], poset_sub: Poset):
    """(class, image) pairs in the node order of poset_sub."""
    return [(node.label, nu[node.label]) for node in poset_sub.nodes]
