"""Functional topologies: the who-talks-to-whom graphs induced by a
clustering protocol, including the base station.

LEACH: every cluster becomes a clique (members exchange data freely inside
the cluster) and each head links to the base station.
Hierarchical tree clustering: communication follows the spanning tree, and
only the tree root links to the base station.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .clustering import BfsTree, ClusteredNetwork


@dataclass(frozen=True)
class FunctionalTopology:
    """Unweighted undirected communication graph over sensors + base station."""

    node_count: int
    edges: tuple[tuple[int, int], ...]   # (low, high), sorted
    roles: tuple[str, ...]

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        masks = [0] * self.node_count
        for a, b in self.edges:
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        return tuple(masks)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.adjacency_masks)


def leach_functional(net: ClusteredNetwork) -> FunctionalTopology:
    """Per-cluster cliques plus one head-to-base-station link per cluster."""
    edges = set()
    for cluster in net.clusters:
        members = cluster.members
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                edges.add((a, b))
        edges.add((cluster.head, net.base_station))
    return FunctionalTopology(node_count=net.base_station + 1,
                              edges=tuple(sorted(edges)),
                              roles=net.roles)


def hcc_functional(tree: BfsTree, net: ClusteredNetwork) -> FunctionalTopology:
    """Spanning-tree edges plus one root-to-base-station link."""
    edges = {(min(c, p), max(c, p)) for c, p in tree.parent.items()}
    edges.add((tree.root, net.base_station))
    return FunctionalTopology(node_count=net.base_station + 1,
                              edges=tuple(sorted(edges)),
                              roles=net.roles)
