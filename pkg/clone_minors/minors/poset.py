"""
Module with the Poset of equivalence classes ordered by the minor relation.
"""

from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple

import networkx as nx

from clone_minors.errors import ConsistencyError, DomainError
from clone_minors.operations import FiniteOp


@dataclass(frozen=True)
class PosetNode:
    """
    One equivalence class.

    Args:
        key: Sort key of the class
        label: Display label, unique within a poset
        representative: Minimal-arity member with the least table
    """
    key: int
    label: str
    representative: FiniteOp


class Poset:
    """
    Equivalence classes with the covering relation of the induced order.

    Args:
        nodes: Classes, any order
        edges: Covering pairs (lower label, upper label)
        name: Clone id the classes belong to
    """

    def __init__(self, nodes: Iterable[PosetNode], edges: Iterable[Tuple[str, str]], name: str = ""):
        self.name = name
        self.nodes: Tuple[PosetNode, ...] = tuple(sorted(nodes, key=lambda node: (node.key, node.label)))
        self._by_label: Dict[str, PosetNode] = {node.label: node for node in self.nodes}
        if len(self._by_label) != len(self.nodes):
            raise DomainError("poset labels must be unique")

        self.graph = nx.DiGraph()
        self.graph.add_nodes_from(self._by_label)
        for lower, upper in edges:
            if lower not in self._by_label or upper not in self._by_label:
                raise DomainError(f"edge ({lower}, {upper}) uses an unknown node")
            self.graph.add_edge(lower, upper)
        if not nx.is_directed_acyclic_graph(self.graph):
            raise ConsistencyError(f"order on {name} classes has a cycle")

    @classmethod
    def from_order(
        cls,
        nodes: Sequence[PosetNode],
        leq: Callable[[PosetNode, PosetNode], bool],
        name: str = "",
    ) -> "Poset":
        """
        Builds the Hasse diagram of a partial order given by a comparison.
        """
        full = nx.DiGraph()
        full.add_nodes_from(node.label for node in nodes)
        for lower in nodes:
            for upper in nodes:
                if lower.label != upper.label and leq(lower, upper):
                    full.add_edge(lower.label, upper.label)
        if not nx.is_directed_acyclic_graph(full):
            raise ConsistencyError(f"{name}: distinct classes compare both ways")
        covers = nx.transitive_reduction(full)
        return cls(nodes, covers.edges(), name)

    def __len__(self) -> int:
        return len(self.nodes)

    def __repr__(self) -> str:
        return f"Poset({self.name!r}, {len(self.nodes)} classes, {len(self.edges)} covers)"

    @property
    def labels(self) -> List[str]:
        return [node.label for node in self.nodes]

    @property
    def edges(self) -> List[Tuple[str, str]]:
        order = {node.label: i for i, node in enumerate(self.nodes)}
        return sorted(self.graph.edges(), key=lambda e: (order[e[0]], order[e[1]]))

    def node(self, label: str) -> PosetNode:
        try:
            return self._by_label[label]
        except KeyError:
            raise DomainError(f"no class labeled {label!r} in {self.name}") from None

    def leq(self, lower: str, upper: str) -> bool:
        return lower == upper or nx.has_path(self.graph, lower, upper)

    def components(self) -> List[FrozenSet[str]]:
        """Connected components of the Hasse diagram, ordered by their least node."""
        order = {node.label: i for i, node in enumerate(self.nodes)}
        found = [frozenset(c) for c in nx.weakly_connected_components(self.graph)]
        return sorted(found, key=lambda c: min(order[label] for label in c))

    def heights(self) -> Dict[str, int]:
        """Length of the longest chain below each class."""
        height: Dict[str, int] = {}
        for label in nx.topological_sort(self.graph):
            below = [height[p] for p in self.graph.predecessors(label)]
            height[label] = max(below) + 1 if below else 0
        return height

    def same_shape(self, other: "Poset") -> bool:
        """Equal label sets and equal covering edges."""
        return set(self.labels) == set(other.labels) and set(self.graph.edges()) == set(other.graph.edges())

    def differences(self, other: "Poset") -> Dict[str, Set]:
        """What `other` lacks and adds relative to this poset."""
        mine, theirs = set(self.labels), set(other.labels)
        my_edges, their_edges = set(self.graph.edges()), set(other.graph.edges())
        return {
            "missing_nodes": mine - theirs,
            "extra_nodes": theirs - mine,
            "missing_edges": my_edges - their_edges,
            "extra_edges": their_edges - my_edges,
        }
