"""Physical WSN topologies and the mutual-reachability communication graph.

Nodes carry a position and a transmission radius. An undirected link between
A and B exists only if each can reach the other, i.e. d(A, B) <= min(R_A, R_B).
"""
from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from functools import cached_property


class DisconnectedGraphError(Exception):
    """Raised when an operation requires reachability that the graph lacks."""

    def __init__(self, message: str, nodes: tuple[int, ...] = ()):
        super().__init__(message)
        self.nodes = nodes


@dataclass(frozen=True)
class Node:
    id: int
    x: float
    y: float
    radius: float


@dataclass(frozen=True)
class PhysicalTopology:
    """Immutable sensor field: nodes plus the derived communication edges."""

    nodes: tuple[Node, ...]
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def node_by_id(self) -> dict[int, Node]:
        return {node.id: node for node in self.nodes}

    @cached_property
    def neighbors(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {node.id: set() for node in self.nodes}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return {v: frozenset(nbrs) for v, nbrs in adj.items()}

    @property
    def node_count(self) -> int:
        return len(self.nodes)


def _mutual_link(a: Node, b: Node) -> bool:
    return math.hypot(a.x - b.x, a.y - b.y) <= min(a.radius, b.radius)


def _derive_edges(nodes: tuple[Node, ...]) -> tuple[tuple[int, int], ...]:
    edges = []
    for i, a in enumerate(nodes):
        for b in nodes[i + 1:]:
            if _mutual_link(a, b):
                edges.append((min(a.id, b.id), max(a.id, b.id)))
    return tuple(sorted(edges))


def grid_topology(rows: int, cols: int, spacing: float = 1.0,
                  radius: float = 1.0) -> PhysicalTopology:
    """Lattice of rows x cols nodes with uniform spacing and radius.

    With spacing <= radius < spacing * sqrt(2) the edge set is the
    4-neighbor lattice adjacency.
    """
    if rows < 1 or cols < 1:
        raise ValueError(f"grid dimensions must be positive, got {rows}x{cols}")
    if spacing <= 0:
        raise ValueError(f"spacing must be positive, got {spacing}")
    if radius <= 0:
        raise ValueError(f"radius must be positive, got {radius}")
    nodes = tuple(
        Node(id=r * cols + c, x=c * spacing, y=r * spacing, radius=radius)
        for r in range(rows)
        for c in range(cols)
    )
    return PhysicalTopology(nodes=nodes, edges=_derive_edges(nodes))


def random_topology(n: int, width: float, height: float, radius: float,
                    seed: int) -> PhysicalTopology:
    """n nodes placed uniformly at random in [0, width] x [0, height]."""
    if n < 1:
        raise ValueError(f"node count must be positive, got {n}")
    if width <= 0 or height <= 0:
        raise ValueError(f"region must have positive size, got {width}x{height}")
    if radius <= 0:
        raise ValueError(f"radius must be positive, got {radius}")
    rng = random.Random(seed)
    nodes = tuple(
        Node(id=i, x=rng.uniform(0.0, width), y=rng.uniform(0.0, height),
             radius=radius)
        for i in range(n)
    )
    return PhysicalTopology(nodes=nodes, edges=_derive_edges(nodes))


def link_exists(topo: PhysicalTopology, a: int, b: int) -> bool:
    """True iff the mutual-reachability inequality holds between a and b."""
    if a == b:
        raise ValueError("link_exists requires two distinct nodes")
    for v in (a, b):
        if v not in topo.node_by_id:
            raise KeyError(f"unknown node id {v}")
    return _mutual_link(topo.node_by_id[a], topo.node_by_id[b])


def to_json(topo: PhysicalTopology) -> str:
    """Serialize to the graph interchange schema with byte-stable ordering."""
    payload = {
        "nodes": [
            {"id": n.id, "x": n.x, "y": n.y, "r": n.radius}
            for n in sorted(topo.nodes, key=lambda n: n.id)
        ],
        "edges": [list(e) for e in sorted(topo.edges)],
    }
    return json.dumps(payload, separators=(", ", ": "), indent=1) + "\n"


def from_json(text: str) -> PhysicalTopology:
    payload = json.loads(text)
    nodes = tuple(
        Node(id=n["id"], x=n["x"], y=n["y"], radius=n["r"])
        for n in payload["nodes"]
    )
    edges = tuple(sorted((min(a, b), max(a, b)) for a, b in payload["edges"]))
    return PhysicalTopology(nodes=nodes, edges=edges)
