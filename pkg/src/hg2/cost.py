"""Cost analysis over the weighted structure.

The cost of one (route, trace) choice splits into three parts: the route's
hyperedge weights, the traced walk's graph edge weights, and the weights of
the connectors realizing the route's anchored pairs. Connectors hanging off
auxiliary nodes never contribute, in line with one-way dependency. The least
cost of a query is the minimum of the total over every (route, trace) choice.

Weights may be ints or floats; with ints all arithmetic is exact, with
floats the decomposition holds to normal double precision (<= 1e-9 here).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    HG2,
    HG2Route,
    NodePair,
    TracedGPath,
    _check_trace,
    _is_walk,
    anchors,
    enumerate_routes,
    validate_route,
)
from .errors import InvalidRouteError, InvalidTraceError, TraceMismatchError
from .graph import shortest_path
from .hyper import Weight


@dataclass(frozen=True)
class CostBreakdown:
    route_cost: Weight
    gpath_cost: Weight
    connector_cost: Weight
    total: Weight


@dataclass(frozen=True)
class CostedPath:
    route: HG2Route
    trace: TracedGPath
    breakdown: CostBreakdown


def route_cost(hg: HG2, r: HG2Route) -> Weight:
    """Sum of the route's hyperedge weights, charged per occurrence."""
    validity = validate_route(hg, r)
    if not validity:
        raise InvalidRouteError(f"route is invalid: {validity.reason}")
    return sum(hg.h.edges_by_id[eid].weight for eid in r.sequence[1::2])


def gpath_cost(hg: HG2, t: TracedGPath) -> Weight:
    """Sum of the traced walk's hop weights; 0 for walks under two nodes."""
    nodes = t.full_nodes
    for label in nodes:
        if label not in hg.g.nodes:
            raise InvalidTraceError(f"unknown graph node {label!r} in trace")
    if not _is_walk(hg.g, nodes):
        raise InvalidTraceError(f"not a walk in G: {list(nodes)}")
    total: Weight = 0
    for a, b in zip(nodes, nodes[1:]):
        total += hg.g.hop_weight(a, b)  # type: ignore[operator]
    return total


def connector_cost(hg: HG2, r: HG2Route, t: TracedGPath) -> Weight:
    """Weights of the connectors realizing the route's anchored pairs.

    Each realized connector counts once, even if an elementary route happens
    to traverse its hyperedge twice. The trace argument never changes the
    value; it is kept because the cost is stated per (route, trace) choice.
    """
    _check_trace(hg, r, t)
    realized_nodes: set[str] = set()
    realized_edges: set[str] = set()
    for pair in r.pairs:
        if pair.anchor is None:
            continue
        if isinstance(pair, NodePair):
            realized_nodes.add(pair.h_node)
        else:
            realized_edges.add(pair.h_edge)
    total: Weight = 0
    for n in sorted(realized_nodes):
        conn = hg.c.by_node.get(n)
        if conn is not None:
            total += conn.weight
    for e in sorted(realized_edges):
        conn = hg.c.by_edge.get(e)
        if conn is not None:
            total += conn.weight
    return total


def total_cost(hg: HG2, r: HG2Route, t: TracedGPath) -> CostBreakdown:
    """Full breakdown for one (route, trace) choice; total is the exact sum."""
    rc = route_cost(hg, r)
    cc = connector_cost(hg, r, t)
    gc = gpath_cost(hg, t)
    return CostBreakdown(rc, gc, cc, rc + gc + cc)


def min_cost_path(hg: HG2, s: str, t: str) -> CostedPath | None:
    """The cheapest (route, trace) answer to a path query, or None.

    For a fixed route the connector cost is trace-independent and the walk
    cost is additive over segments, so the best trace is the concatenation
    of per-segment shortest paths; the route minimum is then taken across
    routes in enumeration order, keeping the earliest on ties. The result
    equals the exhaustive minimum over all (route, trace) pairs.
    """
    best: CostedPath | None = None
    for r in enumerate_routes(hg, s, t):
        chain = anchors(r)
        if len(chain) < 2:
            trace = TracedGPath(tuple(chain), (0,) * len(chain))
        else:
            nodes: list[str] = []
            marks: list[int] = []
            for x, y in zip(chain, chain[1:]):
                seg = shortest_path(hg.g, x, y)
                if seg is None:  # cannot happen for a valid route
                    raise InvalidRouteError(f"no path {x}→{y} in G")
                if not nodes:
                    nodes.extend(seg.nodes)
                    marks.extend((0, len(nodes) - 1))
                else:
                    nodes.extend(seg.nodes[1:])
                    marks.append(len(nodes) - 1)
            trace = TracedGPath(tuple(nodes), tuple(marks))
        candidate = CostedPath(r, trace, total_cost(hg, r, trace))
        if best is None or candidate.breakdown.total < best.breakdown.total:
            best = candidate
    return best
