"""Multipath next-hop computation with Dijkstra-Transverse (DT) and multi-DT (mDT)."""

from .graph import (Graph, GraphError, TopologyGenSpec, dump_graph, fig1_fixture, generate_topology,
                    is_two_edge_connected, load_graph, read_graph)
from .kd import kd
from .partition import EdgeClass, classify_edges
from .spt import OpCounter, dijkstra, ecmp_candidates
from .transverse import candidates_from_matrix, dt, mdt
from .validation import loopfreedom_audit, validate_rule1, validate_rule2

__all__ = [
    "EdgeClass", "Graph", "GraphError", "OpCounter", "TopologyGenSpec", "candidates_from_matrix",
    "classify_edges", "dijkstra", "dt", "dump_graph", "ecmp_candidates", "fig1_fixture",
    "generate_topology", "is_two_edge_connected", "kd", "load_graph", "loopfreedom_audit", "mdt",
    "read_graph", "validate_rule1", "validate_rule2",
]
