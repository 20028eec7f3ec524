"""Naive reference implementations used only by the test suite.

Everything here is written the slow, obvious way: explicit subset
enumeration with itertools.combinations, dict-of-set adjacency, and
textbook BFS. The package under test must agree with these on small graphs.
"""
from __future__ import annotations

import itertools
import math


def adjacency(n, edges):
    adj = {v: set() for v in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    return adj


def bfs_distances(adj, source, allowed=None):
    """Hop distances from source, restricted to `allowed` nodes if given."""
    if allowed is None:
        allowed = set(adj)
    dist = {source: 0}
    queue = [source]
    while queue:
        nxt = []
        for v in queue:
            for u in adj[v]:
                if u in allowed and u not in dist:
                    dist[u] = dist[v] + 1
                    nxt.append(u)
        queue = nxt
    return dist


def entropy(p):
    if p <= 0.0 or p >= 1.0:
        return 0.0
    return -(p * math.log2(p) + (1.0 - p) * math.log2(1.0 - p))


def subset_connected(adj, subset):
    subset = set(subset)
    start = next(iter(subset))
    return set(bfs_distances(adj, start, subset)) == subset


def subgraph_info(n, edges, subset, r):
    """Sum of per-node binary entropies of the within-r reach fraction."""
    adj = adjacency(n, edges)
    subset = set(subset)
    total = 0.0
    for v in subset:
        dist = bfs_distances(adj, v, subset)
        reach = sum(1 for u, d in dist.items() if u != v and d <= r)
        total += entropy(reach / (len(subset) - 1))
    return total


def average_information(n, edges, j, r, connected_only):
    adj = adjacency(n, edges)
    values = []
    for combo in itertools.combinations(range(n), j):
        if connected_only and not subset_connected(adj, combo):
            continue
        values.append(subgraph_info(n, edges, combo, r))
    if not values:
        return 0.0
    return sum(values) / len(values)


def full_information(n, edges, r):
    return subgraph_info(n, edges, range(n), r)


def cf_single(n, edges, connected_only):
    full = full_information(n, edges, 1)
    total = 0.0
    for j in range(2, n + 1):
        avg = average_information(n, edges, j, 1, connected_only)
        total += abs(avg - (j / n) * full)
    return total


def diameter(n, edges):
    adj = adjacency(n, edges)
    best = 0
    for v in range(n):
        dist = bfs_distances(adj, v)
        if len(dist) != n:
            raise ValueError("graph is disconnected")
        best = max(best, max(dist.values()))
    return best


def cf_multi(n, edges, connected_only):
    dia = diameter(n, edges)
    if dia == 1:
        return 0.0
    totals = []
    for r in range(1, dia):
        full = full_information(n, edges, r)
        total = 0.0
        for j in range(max(2, 1 + r), n + 1):
            avg = average_information(n, edges, j, r, connected_only)
            total += abs(avg - (j / n) * full)
        totals.append(total)
    return sum(totals) / len(totals)


def connected_subset_count(n, edges, j):
    adj = adjacency(n, edges)
    return sum(1 for combo in itertools.combinations(range(n), j)
               if subset_connected(adj, combo))
