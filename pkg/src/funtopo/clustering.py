"""Cluster formation over a physical topology: LEACH-style random head
election and hierarchical subtree clustering over a BFS spanning tree.

A clustered network always gains one synthetic base-station node whose id is
len(sensors); sensors keep their physical ids 0..n-1.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property

from .topology import DisconnectedGraphError, PhysicalTopology

ORDINARY = "ordinary"
HEAD = "head"
BASE_STATION = "base_station"


@dataclass(frozen=True)
class Cluster:
    head: int
    members: tuple[int, ...]  # ascending ids, head included


@dataclass(frozen=True)
class ClusteredNetwork:
    """Partition of the sensor ids into head-led clusters, plus a base station."""

    clusters: tuple[Cluster, ...]      # ascending head id
    base_station: int                  # synthetic id == number of sensors

    @cached_property
    def roles(self) -> tuple[str, ...]:
        role = [ORDINARY] * (self.base_station + 1)
        for cluster in self.clusters:
            role[cluster.head] = HEAD
        role[self.base_station] = BASE_STATION
        return tuple(role)

    @cached_property
    def cluster_of(self) -> tuple[int, ...]:
        index = [-1] * self.base_station
        for ci, cluster in enumerate(self.clusters):
            for member in cluster.members:
                index[member] = ci
        return tuple(index)

    @property
    def sensor_count(self) -> int:
        return self.base_station

    def __post_init__(self):
        seen: set[int] = set()
        for cluster in self.clusters:
            if cluster.head not in cluster.members:
                raise ValueError(f"head {cluster.head} not in its own cluster")
            if seen & set(cluster.members):
                raise ValueError("clusters must be disjoint")
            seen.update(cluster.members)
        if seen != set(range(self.base_station)):
            raise ValueError("clusters must cover every sensor exactly once")


def _build(clusters: list[tuple[int, list[int]]], n: int) -> ClusteredNetwork:
    ordered = sorted(clusters, key=lambda c: c[0])
    return ClusteredNetwork(
        clusters=tuple(Cluster(head=h, members=tuple(sorted(m)))
                       for h, m in ordered),
        base_station=n,
    )


def leach_cluster(phys: PhysicalTopology, head_count: int,
                  seed: int) -> ClusteredNetwork:
    """Elect head_count heads uniformly at random; every other node joins the
    closest head by Euclidean distance, ties broken by lowest head id."""
    ids = sorted(node.id for node in phys.nodes)
    if not 1 <= head_count <= len(ids):
        raise ValueError(
            f"head_count must be in 1..{len(ids)}, got {head_count}")
    rng = random.Random(seed)
    heads = sorted(rng.sample(ids, head_count))
    members: dict[int, list[int]] = {h: [h] for h in heads}
    by_id = phys.node_by_id
    for v in ids:
        if v in members:
            continue
        node = by_id[v]
        best = min(heads, key=lambda h: ((by_id[h].x - node.x) ** 2
                                         + (by_id[h].y - node.y) ** 2, h))
        members[best].append(v)
    return _build([(h, m) for h, m in members.items()], len(ids))


def rotate_heads(net: ClusteredNetwork, seed: int) -> ClusteredNetwork:
    """New network with each cluster's head re-elected uniformly at random
    among the other members; singleton clusters keep their head."""
    rng = random.Random(seed)
    clusters = []
    for cluster in net.clusters:
        candidates = [m for m in cluster.members if m != cluster.head]
        head = rng.choice(candidates) if candidates else cluster.head
        clusters.append((head, list(cluster.members)))
    return _build(clusters, net.base_station)


@dataclass(frozen=True)
class BfsTree:
    """Breadth-first spanning tree with per-node depth and subtree size."""

    root: int
    parent: dict[int, int]        # every node except the root
    depth: dict[int, int]
    subtree_size: dict[int, int]

    @cached_property
    def children(self) -> dict[int, tuple[int, ...]]:
        kids: dict[int, list[int]] = {v: [] for v in self.depth}
        for child, par in self.parent.items():
            kids[par].append(child)
        return {v: tuple(sorted(c)) for v, c in kids.items()}

    @property
    def nodes(self) -> tuple[int, ...]:
        return tuple(sorted(self.depth))


def bfs_tree(phys: PhysicalTopology, root: int) -> BfsTree:
    """Level-synchronous BFS; each discovered node attaches to its lowest-id
    neighbor in the previous level."""
    if root not in phys.node_by_id:
        raise KeyError(f"unknown node id {root}")
    nbr = phys.neighbors
    depth = {root: 0}
    parent: dict[int, int] = {}
    level = [root]
    d = 0
    while level:
        d += 1
        frontier = sorted({u for v in level for u in nbr[v] if u not in depth})
        for u in frontier:
            depth[u] = d
            parent[u] = min(v for v in nbr[u] if v in depth and depth[v] == d - 1)
        level = frontier
    unreachable = tuple(sorted(set(phys.node_by_id) - set(depth)))
    if unreachable:
        raise DisconnectedGraphError(
            f"nodes unreachable from root {root}: {list(unreachable)}",
            nodes=unreachable)
    size = {v: 1 for v in depth}
    for v in sorted(depth, key=lambda v: -depth[v]):
        if v != root:
            size[parent[v]] += size[v]
    return BfsTree(root=root, parent=parent, depth=depth, subtree_size=size)


def hcc_cluster(tree: BfsTree, k: int) -> ClusteredNetwork:
    """Bottom-up subtree clustering with target size k.

    Nodes are visited deepest first (ties by ascending id). A node whose
    still-unclaimed subtree holds s nodes claims it as one cluster when
    k <= s < 2k, with itself as head. When s >= 2k the unclaimed child
    branches are grouped in ascending child id order, closing a cluster
    whenever a group reaches k nodes (headed by the group's lowest branch
    root); the node then re-applies the base rule to what remains. The root
    finally claims any remainder, even if smaller than k.
    """
    if k < 1:
        raise ValueError(f"cluster size target must be positive, got {k}")
    # live[v] holds the not-yet-claimed nodes of v's branch once v is visited
    live: dict[int, list[int]] = {v: [] for v in tree.nodes}
    clusters: list[tuple[int, list[int]]] = []
    order = sorted(tree.nodes, key=lambda v: (-tree.depth[v], v))
    for v in order:
        branches = [(c, live[c]) for c in tree.children.get(v, ()) if live[c]]
        merged = [v]
        pending = 1 + sum(len(nodes) for _, nodes in branches)
        if pending >= 2 * k:
            group: list[int] = []
            roots: list[int] = []
            for c, nodes in branches:
                group.extend(nodes)
                roots.append(c)
                if len(group) >= k:
                    clusters.append((min(roots), group))
                    group, roots = [], []
            merged.extend(group)
        else:
            for _, nodes in branches:
                merged.extend(nodes)
        for c, _ in branches:
            live[c] = []
        if v == tree.root or k <= len(merged) < 2 * k:
            clusters.append((v, merged))
        else:
            live[v] = merged
    return _build(clusters, len(tree.nodes))
