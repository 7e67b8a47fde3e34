"""Two-layer hypergraph-graph data structure with path and cost analysis.

A directed hypergraph rides on top of a directed weighted graph, coupled by
weighted connectors. The package builds and validates such structures,
enumerates hyperpaths and routes, traces the graph paths a route induces,
classifies participating versus auxiliary nodes, and finds least-cost
answers with full cost breakdowns.
"""

from .core import (
    HG2,
    ConnectorSet,
    EdgeConnector,
    EdgePair,
    HG2Route,
    NodeConnector,
    NodePair,
    NodeRole,
    RouteValidity,
    TracedGPath,
    anchors,
    build_connector_set,
    build_hg2,
    classify_nodes,
    edge_pair,
    enumerate_routes,
    format_route,
    has_gloop,
    node_pair,
    pairs_of_sequence,
    route_of,
    trace_from_nodes,
    trace_gpaths,
    validate_route,
)
from .cost import (
    CostBreakdown,
    CostedPath,
    connector_cost,
    gpath_cost,
    min_cost_path,
    route_cost,
    total_cost,
)
from .graph import (
    GPath,
    Graph,
    GraphEdge,
    build_graph,
    enumerate_paths,
    path_exists,
    shortest_path,
)
from .hyper import (
    HyperEdge,
    Hypergraph,
    HyperpathTraits,
    build_hypergraph,
    classify_hyperpath,
    enumerate_hyperpaths,
    is_hyperpath,
)
from .io import export_dot, load, save
from . import errors

__version__ = "0.1.0"

__all__ = [
    "HG2",
    "ConnectorSet",
    "CostBreakdown",
    "CostedPath",
    "EdgeConnector",
    "EdgePair",
    "GPath",
    "Graph",
    "GraphEdge",
    "HG2Route",
    "HyperEdge",
    "Hypergraph",
    "HyperpathTraits",
    "NodeConnector",
    "NodePair",
    "NodeRole",
    "RouteValidity",
    "TracedGPath",
    "anchors",
    "build_connector_set",
    "build_graph",
    "build_hg2",
    "build_hypergraph",
    "classify_hyperpath",
    "classify_nodes",
    "connector_cost",
    "edge_pair",
    "enumerate_hyperpaths",
    "enumerate_paths",
    "enumerate_routes",
    "errors",
    "export_dot",
    "format_route",
    "gpath_cost",
    "has_gloop",
    "is_hyperpath",
    "load",
    "min_cost_path",
    "node_pair",
    "pairs_of_sequence",
    "path_exists",
    "route_cost",
    "route_of",
    "save",
    "shortest_path",
    "total_cost",
    "trace_from_nodes",
    "trace_gpaths",
    "validate_route",
]
