"""Toolkit for analysing dual networks.

A dual network pairs an unweighted physical graph with an edge-weighted
conceptual graph over overlapping node sets. The toolkit merges the pair
into a weighted alignment graph and extracts the densest connected
subgraph or modular communities that stay connected in the physical
network, with evaluation metrics, a synthetic benchmark harness, a CLI
and a small job-oriented HTTP service.
"""

from dualnet.graph import (
    DualNetwork,
    Graph,
    LoadError,
    NodeMapping,
    ParseError,
    connected_components,
    induced_subgraph,
    load_dual_network,
    parse_edge_list,
    parse_similarity,
    serialize_edge_list,
    weighted_degree,
)

__all__ = [
    "DualNetwork",
    "Graph",
    "LoadError",
    "NodeMapping",
    "ParseError",
    "connected_components",
    "induced_subgraph",
    "load_dual_network",
    "parse_edge_list",
    "parse_similarity",
    "serialize_edge_list",
    "weighted_degree",
]

__version__ = "0.1.0"
