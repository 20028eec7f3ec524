import itertools

from funtopo import (BASE_STATION, Cluster, ClusteredNetwork, bfs_tree,
                     grid_topology, hcc_cluster, hcc_functional,
                     leach_cluster, leach_functional)


def block_network(sizes):
    clusters, start = [], 0
    for s in sizes:
        clusters.append(Cluster(head=start,
                                members=tuple(range(start, start + s))))
        start += s
    return ClusteredNetwork(clusters=tuple(clusters), base_station=start)


def neighbors(func):
    adj = {v: set() for v in range(func.node_count)}
    for a, b in func.edges:
        adj[a].add(b)
        adj[b].add(a)
    return adj


# ------------------------------------------------------------------- leach

def test_leach_functional_edge_counts():
    assert len(leach_functional(block_network([5, 5, 5, 5])).edges) == 44
    assert len(leach_functional(block_network([7, 7, 6])).edges) == 60
    assert len(leach_functional(block_network([20])).edges) == 191


def test_leach_functional_cluster_cliques_and_bs_links():
    net = leach_cluster(grid_topology(4, 5), 4, seed=13)
    func = leach_functional(net)
    assert func.node_count == 21
    assert func.roles == net.roles
    edge_set = set(func.edges)
    for c in net.clusters:
        for a, b in itertools.combinations(c.members, 2):
            assert (min(a, b), max(a, b)) in edge_set
        assert (c.head, 20) in edge_set
    # base station degree equals the number of clusters
    assert func.degrees[20] == len(net.clusters)
    # nothing else crosses cluster boundaries
    for a, b in func.edges:
        if 20 in (a, b):
            continue
        assert net.cluster_of[a] == net.cluster_of[b]


def test_leach_functional_bs_removal_components_match_cluster_count():
    for sizes in ([5, 5, 5, 5], [7, 7, 6], [2] * 10, [20]):
        net = block_network(sizes)
        func = leach_functional(net)
        adj = neighbors(func)
        seen, components = set(), 0
        for v in range(20):
            if v in seen:
                continue
            components += 1
            stack = [v]
            while stack:
                u = stack.pop()
                if u in seen:
                    continue
                seen.add(u)
                stack.extend(w for w in adj[u] if w != 20 and w not in seen)
        assert components == len(sizes)


# --------------------------------------------------------------------- hcc

def test_hcc_functional_is_tree_plus_bs_link():
    topo = grid_topology(4, 5)
    tree = bfs_tree(topo, 0)
    net = hcc_cluster(tree, 5)
    func = hcc_functional(tree, net)
    assert func.node_count == 21
    assert len(func.edges) == 20           # edge count equals sensor count
    assert (0, 20) in func.edges           # root to base station
    assert func.degrees[20] == 1
    # connected and acyclic on 21 nodes with 20 edges: connectivity suffices
    adj = neighbors(func)
    seen, stack = set(), [0]
    while stack:
        u = stack.pop()
        if u in seen:
            continue
        seen.add(u)
        stack.extend(adj[u] - seen)
    assert len(seen) == 21


def test_functional_edges_sorted_and_masks_consistent():
    net = leach_cluster(grid_topology(4, 5), 3, seed=2)
    func = leach_functional(net)
    assert list(func.edges) == sorted(func.edges)
    assert all(a < b for a, b in func.edges)
    for a, b in func.edges:
        assert (func.adjacency_masks[a] >> b) & 1
        assert (func.adjacency_masks[b] >> a) & 1
    assert sum(func.degrees) == 2 * len(func.edges)
