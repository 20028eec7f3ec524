"""Acceptance gate: eight criteria, one test and one verbose pass/fail line
per criterion, with pinned values and tolerances.

Criterion 5 pins the reference values 1.905 and 1.075 exactly. The second is
reproduced. The first is arithmetically unreachable for every 3-cluster
partition of 20 sensors: the mean intra-cluster degree is a sum of terms
s*(s-1)/20, always a multiple of 0.1, so dividing by 3 heads can never yield
1.905 (it yields 1.9 for {7,7,6}). The test states the expectation honestly
and is expected to fail; the discrepancy analysis ships in README.md.
"""
import itertools
import math
import random
import time
from pathlib import Path

import bruteforce as bf
from funtopo import (Cluster, ClusteredNetwork, FunctionalTopology, ORDINARY,
                     average_information_exact, average_information_sampled,
                     bfs_tree, complexity_single_scale, energy_efficiency,
                     grid_topology, hcc_cluster, hcc_functional,
                     leach_functional, single_scale_hub_of_cliques)
import funtopo.cli as cli

README = Path(__file__).resolve().parent.parent / "README.md"


def graph(n, edges):
    return FunctionalTopology(node_count=n, edges=tuple(sorted(edges)),
                              roles=(ORDINARY,) * n)


def complete(n):
    return graph(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def edgeless(n):
    return graph(n, [])


def block_network(sizes):
    clusters, start = [], 0
    for s in sizes:
        clusters.append(Cluster(head=start,
                                members=tuple(range(start, start + s))))
        start += s
    return ClusteredNetwork(clusters=tuple(clusters), base_station=start)


def random_connected_edges(n, extra_p, rng):
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], rng.choice(order[:i]))))
             for i in range(1, n)}
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < extra_p:
                edges.add((a, b))
    return sorted(edges)


def read_table2(tmp_path, *extra):
    rc = cli.main(["table2", "--out", str(tmp_path), *extra])
    assert rc == 0
    lines = (tmp_path / "table2.csv").read_text().splitlines()[1:]
    rows = [line.split(",") for line in lines]
    return [(int(c), float(cf), float(ee), float(m)) for c, cf, ee, m in rows]


def test_criterion_1_endpoint_exactness():
    """Complexity is exactly zero for complete and for edgeless graphs."""
    for n in range(2, 13):
        for g in (complete(n), edgeless(n)):
            start = time.perf_counter()
            prof = complexity_single_scale(g)
            elapsed = time.perf_counter() - start
            assert prof.cf == 0.0, (n, len(g.edges), prof.cf)
            assert elapsed < 1.0, (n, elapsed)
    print("criterion 1: PASS, cf == 0.0 exactly for K_n and edgeless, "
          "n in 2..12")


def test_criterion_2_table_message_row(tmp_path):
    """Join-message column is 5.33, 3.75, 2.80, 2.16, 1, 1 at 2 decimals."""
    start = time.perf_counter()
    rows = read_table2(tmp_path)
    elapsed = time.perf_counter() - start
    msgs = [round(r[3], 2) for r in rows]
    assert msgs == [5.33, 3.75, 2.80, 2.16, 1.00, 1.00], msgs
    assert elapsed < 1.0, elapsed
    print(f"criterion 2: PASS, message row {msgs} in {elapsed:.3f}s")


def test_criterion_3_table_cf_trend(tmp_path):
    """cf rises strictly with cluster count up to 16, then drops at 19."""
    rows = read_table2(tmp_path, "--replications", "20")
    counts = [r[0] for r in rows]
    cfs = [r[1] for r in rows]
    assert counts == [3, 4, 5, 6, 16, 19]
    rising = cfs[:5]
    assert all(a < b for a, b in zip(rising, rising[1:])), cfs
    assert cfs[5] < cfs[4], cfs
    print(f"criterion 3: PASS, cf trend {['%.3f' % v for v in cfs]}")


def test_criterion_4_calibration_targets_or_documented_discrepancy():
    """Value targets 19.24 (4-cluster cliques-and-hub) and 38.31 (tree),
    tolerance 15%; otherwise the documented-discrepancy escape applies."""
    leach4 = single_scale_hub_of_cliques([5, 5, 5, 5]).cf
    tree = bfs_tree(grid_topology(4, 5), 0)
    net = hcc_cluster(tree, 5)
    hcc_cf = complexity_single_scale(hcc_functional(tree, net)).cf
    nineteen = single_scale_hub_of_cliques([2] + [1] * 18).cf

    def deviation(value, ref):
        return (value - ref) / ref

    devs = {"19.24": deviation(leach4, 19.24),
            "38.31": deviation(hcc_cf, 38.31),
            "31.85": deviation(nineteen, 31.85)}
    within = {k: abs(v) <= 0.15 for k, v in devs.items()}
    detail = ", ".join(f"ref {k}: {v:+.1%}" for k, v in devs.items())
    if within["19.24"] and within["38.31"]:
        print(f"criterion 4: PASS on values, {detail}")
        return
    # documented-discrepancy escape: the calibration report must ship in
    # the docs, covering the estimator variants tried and values obtained
    assert README.exists()
    text = README.read_text(encoding="utf-8")
    assert "known discrepancies" in text.lower(), "calibration report missing"
    for marker in ("19.24", "38.31", "31.85", "connected", "all subsets",
                   f"{leach4:.2f}", f"{hcc_cf:.2f}", f"{nineteen:.2f}"):
        assert marker in text, f"calibration report lacks {marker!r}"
    assert within["38.31"], devs  # the tree target does hold
    print(f"criterion 4: PASS via documented discrepancy, {detail}")


def test_criterion_5_energy_efficiency_reference_values():
    """Pins 1.905 and 1.075 exactly; 1.905 is unreachable (see module
    docstring), so this criterion fails by design and stays red."""
    net = block_network([7, 5, 4, 4])
    ee_mixed = energy_efficiency(leach_functional(net), net)
    assert ee_mixed == 1.075, ee_mixed

    net = block_network([7, 7, 6])
    ee_three = energy_efficiency(leach_functional(net), net)
    print(f"criterion 5: {{7,7,6}} energy efficiency is {ee_three!r}; "
          f"1.905 would need a mean intra-cluster degree of 5.715, but "
          f"sums of s*(s-1) are even, so the mean is a multiple of 0.1")
    assert ee_three == 1.905, ee_three


def test_criterion_6_oracle_equivalence():
    """30 random graphs, N <= 12: naive all-subset enumeration agrees with
    complexity_single_scale to 1e-9 bits."""
    start = time.perf_counter()
    rng = random.Random(60321)
    worst = 0.0
    for trial in range(30):
        n = rng.randint(2, 12)
        p = rng.choice([0.15, 0.3, 0.5, 0.75])
        edges = [(a, b) for a in range(n) for b in range(a + 1, n)
                 if rng.random() < p]
        got = complexity_single_scale(graph(n, edges)).cf
        want = bf.cf_single(n, edges, True)
        worst = max(worst, abs(got - want))
        assert abs(got - want) <= 1e-9, (trial, n, edges, got, want)
    elapsed = time.perf_counter() - start
    assert elapsed < 300.0, elapsed
    print(f"criterion 6: PASS, 30 graphs, worst deviation {worst:.2e} bits "
          f"in {elapsed:.1f}s")


def test_criterion_7_sampler_soundness():
    """10 random graphs, N <= 15: sampled mean at 10,000 draws within three
    standard errors of exact for every subset size."""
    start = time.perf_counter()
    rng = random.Random(20260819)
    for trial in range(10):
        n = rng.randint(8, 15)
        g = graph(n, random_connected_edges(n, 0.25, rng))
        for j in range(2, n + 1):
            exact = average_information_exact(g, j)
            mean, stderr = average_information_sampled(
                g, j, samples=10_000, seed=rng.randrange(2 ** 30))
            assert abs(mean - exact) <= max(3 * stderr, 1e-9), (
                trial, n, j, exact, mean, stderr)
    elapsed = time.perf_counter() - start
    assert elapsed < 300.0, elapsed
    print(f"criterion 7: PASS, 10 graphs within 3 standard errors "
          f"in {elapsed:.1f}s")


def test_criterion_8_structural_invariants():
    """Tree functional topology, clique completeness, and exact isomorphism
    invariance of the complexity value."""
    # tree shape: edge count equals sensor count, connected
    tree = bfs_tree(grid_topology(4, 5), 0)
    net = hcc_cluster(tree, 5)
    func = hcc_functional(tree, net)
    assert len(func.edges) == net.sensor_count == 20
    adj = {v: set() for v in range(func.node_count)}
    for a, b in func.edges:
        adj[a].add(b)
        adj[b].add(a)
    seen, stack = set(), [0]
    while stack:
        u = stack.pop()
        if u not in seen:
            seen.add(u)
            stack.extend(adj[u] - seen)
    assert len(seen) == func.node_count

    # every cluster induces a complete subgraph under clique mapping
    for sizes in ([5, 5, 5, 5], [7, 7, 6], [3, 2, 1]):
        lnet = block_network(sizes)
        lfunc = leach_functional(lnet)
        edge_set = set(lfunc.edges)
        for c in lnet.clusters:
            for a, b in itertools.combinations(c.members, 2):
                assert (a, b) in edge_set

    # exact isomorphism invariance on a fixed 12-node graph
    rng = random.Random(88)
    edges = random_connected_edges(12, 0.3, rng)
    base = complexity_single_scale(graph(12, edges)).cf
    for _ in range(20):
        perm = list(range(12))
        rng.shuffle(perm)
        relabeled = [(min(perm[a], perm[b]), max(perm[a], perm[b]))
                     for a, b in edges]
        relabeled_cf = complexity_single_scale(graph(12, relabeled)).cf
        assert relabeled_cf == base, (relabeled_cf, base)
    print("criterion 8: PASS, tree shape, clique completeness, and exact "
          "relabeling invariance")
