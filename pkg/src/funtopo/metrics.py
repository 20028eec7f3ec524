"""Operational metrics of a clustered functional topology."""
from __future__ import annotations

from dataclasses import dataclass

from .clustering import ClusteredNetwork
from .functional import FunctionalTopology

LEACH = "leach"
HCC = "hcc"


@dataclass(frozen=True)
class MetricsReport:
    cluster_count: int
    cf: float
    energy_efficiency: float
    avg_join_messages: float


def energy_efficiency(f: FunctionalTopology, net: ClusteredNetwork) -> float:
    """Mean intra-cluster degree per sensor, divided by the number of
    head-to-base-station links."""
    if not net.clusters:
        raise ValueError("network holds no clusters")
    bs = net.base_station
    bs_edges = sum(1 for a, b in f.edges if a == bs or b == bs)
    if bs_edges == 0:
        raise ValueError("functional topology has no base-station links")
    cluster_of = net.cluster_of
    intra = [0] * net.sensor_count
    for a, b in f.edges:
        if a == bs or b == bs:
            continue
        if cluster_of[a] == cluster_of[b]:
            intra[a] += 1
            intra[b] += 1
    mean_degree = sum(intra) / net.sensor_count
    return mean_degree / bs_edges


def join_message_counts(net: ClusteredNetwork) -> tuple[int, ...]:
    """Per-cluster message count a joining node triggers under random head
    election: it notifies every ordinary member of the cluster it joins, and
    a cluster with no ordinary members still costs the one message to its
    head."""
    return tuple(max(1, len(c.members) - 1) for c in net.clusters)


def join_messages(net: ClusteredNetwork, algorithm: str) -> float:
    """Average number of messages a joining node sends, uniform over the
    cluster it could join. Tree-based clustering needs a single message
    regardless of cluster sizes."""
    if not net.clusters:
        raise ValueError("network holds no clusters")
    if algorithm == HCC:
        return 1.0
    if algorithm != LEACH:
        raise ValueError(f"unknown clustering algorithm {algorithm!r}")
    counts = join_message_counts(net)
    return sum(counts) / len(counts)
