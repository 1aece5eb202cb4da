"""rwnet: random-walk network growth with distance-biased shortcut edges."""

from .graph import Graph, load_edge_list, save_edge_list
from .generator import (
    GenParams,
    IterationEvent,
    add_shortcut_edge,
    build_initial_graph,
    find_node_at_distance,
    generate,
    run_random_walk,
)
from .metrics import (
    DegreeHistogram,
    NetworkMetrics,
    average_local_clustering,
    average_shortest_path,
    degree_histogram,
    fit_power_law,
    local_clustering,
    measure,
    transitivity,
)
from .sampling import (
    DistanceDistribution,
    build_distance_distribution,
    estimate_diameter,
    sample_distance,
    sample_step_length,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GenParams",
    "IterationEvent",
    "DegreeHistogram",
    "NetworkMetrics",
    "DistanceDistribution",
    "add_shortcut_edge",
    "average_local_clustering",
    "average_shortest_path",
    "build_distance_distribution",
    "build_initial_graph",
    "degree_histogram",
    "estimate_diameter",
    "find_node_at_distance",
    "fit_power_law",
    "generate",
    "load_edge_list",
    "local_clustering",
    "measure",
    "run_random_walk",
    "sample_distance",
    "sample_step_length",
    "save_edge_list",
    "transitivity",
]
