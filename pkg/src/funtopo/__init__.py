"""funtopo: functional topologies and functional complexity of clustered
wireless sensor networks."""
from .topology import (DisconnectedGraphError, Node, PhysicalTopology,
                       from_json, grid_topology, link_exists, random_topology,
                       to_json)
from .clustering import (BASE_STATION, HEAD, ORDINARY, BfsTree, Cluster,
                         ClusteredNetwork, bfs_tree, hcc_cluster,
                         leach_cluster, rotate_heads)
from .functional import FunctionalTopology, hcc_functional, leach_functional
from .complexity import (BudgetExceededError, ComplexityProfile, SubgraphInfo,
                         average_information_exact,
                         average_information_sampled,
                         complexity_multi_scale, complexity_single_scale,
                         interaction_probability, measure_subgraph,
                         node_entropy, single_scale_hub_of_cliques,
                         subgraph_information)
from .metrics import MetricsReport, energy_efficiency, join_messages

__version__ = "0.1.0"

__all__ = [
    "BASE_STATION", "BfsTree", "BudgetExceededError", "Cluster",
    "ClusteredNetwork", "ComplexityProfile", "DisconnectedGraphError",
    "FunctionalTopology", "HEAD", "MetricsReport", "Node", "ORDINARY",
    "PhysicalTopology", "SubgraphInfo", "average_information_exact",
    "average_information_sampled", "bfs_tree", "complexity_multi_scale",
    "complexity_single_scale", "energy_efficiency", "from_json",
    "grid_topology", "hcc_cluster", "hcc_functional",
    "interaction_probability", "join_messages", "leach_cluster",
    "leach_functional", "link_exists", "measure_subgraph", "node_entropy",
    "random_topology", "rotate_heads", "single_scale_hub_of_cliques",
    "subgraph_information", "to_json",
]
