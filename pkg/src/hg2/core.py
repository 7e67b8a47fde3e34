"""The coupled two-layer structure and its route machinery.

Connectors attach hypernodes and hyperedges to graph nodes, one connector
per source at most. A route pairs every element of a hyperpath with its
connected graph node (or the empty anchor), and the route is valid when the
underlying hyperpath holds, the pairs match the connector set, and each
consecutive anchor pair is joined by some directed path in the lower graph.
Dependency is one-way, upper layer to lower layer, so connectors hanging off
nodes that merely appear inside a traced walk never constrain anything.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from .errors import (
    DanglingConnectorError,
    DuplicateSourceConnectorError,
    InvalidRouteError,
    InvalidTraceError,
    NegativeWeightError,
    NotAHyperpathError,
    TraceMismatchError,
    UnknownIdError,
)
from .graph import Graph, enumerate_paths, path_exists
from .hyper import Hypergraph, Weight, enumerate_hyperpaths, is_hyperpath


@dataclass(frozen=True)
class NodeConnector:
    h_node: str
    g_node: str
    weight: Weight


@dataclass(frozen=True)
class EdgeConnector:
    h_edge: str
    g_node: str
    weight: Weight


@dataclass(frozen=True)
class ConnectorSet:
    node_connectors: tuple[NodeConnector, ...]
    edge_connectors: tuple[EdgeConnector, ...]

    @cached_property
    def by_node(self) -> dict[str, NodeConnector]:
        return {c.h_node: c for c in self.node_connectors}

    @cached_property
    def by_edge(self) -> dict[str, EdgeConnector]:
        return {c.h_edge: c for c in self.edge_connectors}

    @cached_property
    def touching(self) -> dict[str, tuple[NodeConnector | EdgeConnector, ...]]:
        """graph node -> connectors landing on it (for classification)."""
        out: dict[str, list[NodeConnector | EdgeConnector]] = {}
        for c in self.node_connectors + self.edge_connectors:
            out.setdefault(c.g_node, []).append(c)
        return {g: tuple(cs) for g, cs in out.items()}


def build_connector_set(
    node: Iterable[tuple[str, str, Weight]] = (),
    edge: Iterable[tuple[str, str, Weight]] = (),
) -> ConnectorSet:
    """Assemble a connector set from (source, graph node, weight) rows.

    Validation against the two layers happens in build_hg2.
    """
    return ConnectorSet(
        tuple(NodeConnector(h, g, w) for h, g, w in node),
        tuple(EdgeConnector(h, g, w) for h, g, w in edge),
    )


@dataclass(frozen=True)
class HG2:
    h: Hypergraph
    g: Graph
    c: ConnectorSet


def build_hg2(h: Hypergraph, g: Graph, c: ConnectorSet) -> HG2:
    """Couple the layers, checking every connector endpoint and source."""
    seen_nodes: set[str] = set()
    for conn in c.node_connectors:
        if conn.h_node not in h.nodes:
            raise DanglingConnectorError(f"connector source {conn.h_node!r} is no hypernode")
        if conn.g_node not in g.nodes:
            raise DanglingConnectorError(f"connector target {conn.g_node!r} is no graph node")
        if conn.h_node in seen_nodes:
            raise DuplicateSourceConnectorError(
                f"hypernode {conn.h_node!r} carries more than one connector"
            )
        if not conn.weight >= 0:
            raise NegativeWeightError(f"connector {conn.h_node!r}->{conn.g_node!r} weight < 0")
        seen_nodes.add(conn.h_node)

    seen_edges: set[str] = set()
    for conn in c.edge_connectors:
        if conn.h_edge not in h.edges_by_id:
            raise DanglingConnectorError(f"connector source {conn.h_edge!r} is no hyperedge")
        if conn.g_node not in g.nodes:
            raise DanglingConnectorError(f"connector target {conn.g_node!r} is no graph node")
        if conn.h_edge in seen_edges:
            raise DuplicateSourceConnectorError(
                f"hyperedge {conn.h_edge!r} carries more than one connector"
            )
        if not conn.weight >= 0:
            raise NegativeWeightError(f"connector {conn.h_edge!r}->{conn.g_node!r} weight < 0")
        seen_edges.add(conn.h_edge)

    return HG2(h, g, c)


@dataclass(frozen=True)
class NodePair:
    """A hypernode with its connected graph node, written 1(a) or 3()."""

    h_node: str
    anchor: str | None

    def __str__(self) -> str:
        return f"{self.h_node}({self.anchor or ''})"


@dataclass(frozen=True)
class EdgePair:
    """A hyperedge with its connected graph node, written E1(c) or E2()."""

    h_edge: str
    anchor: str | None

    def __str__(self) -> str:
        return f"{self.h_edge}({self.anchor or ''})"


Pair = NodePair | EdgePair


@dataclass(frozen=True)
class HG2Route:
    """Alternating node/edge pair sequence realizing one hyperpath."""

    pairs: tuple[Pair, ...]

    def __post_init__(self) -> None:
        if len(self.pairs) < 3 or len(self.pairs) % 2 == 0:
            raise ValueError("a route needs pairs NP, EP, NP, ... with at least one EP")
        for i, pair in enumerate(self.pairs):
            want = NodePair if i % 2 == 0 else EdgePair
            if not isinstance(pair, want):
                raise ValueError(f"pair {i} must be a {want.__name__}")

    @property
    def source(self) -> str:
        return self.pairs[0].h_node  # type: ignore[union-attr]

    @property
    def target(self) -> str:
        return self.pairs[-1].h_node  # type: ignore[union-attr]

    @property
    def sequence(self) -> tuple[str, ...]:
        """The underlying alternating hypernode/hyperedge label sequence."""
        return tuple(
            p.h_node if isinstance(p, NodePair) else p.h_edge for p in self.pairs
        )

    @property
    def hypernodes(self) -> frozenset[str]:
        return frozenset(p.h_node for p in self.pairs if isinstance(p, NodePair))

    @property
    def hyperedges(self) -> frozenset[str]:
        return frozenset(p.h_edge for p in self.pairs if isinstance(p, EdgePair))

    def __str__(self) -> str:
        return format_route(self)


def format_route(r: HG2Route) -> str:
    """Pair notation, e.g. ``1(a), E1(c), 3(), E2(), 5(d), E3(e), 7()``."""
    return ", ".join(str(p) for p in r.pairs)


@dataclass(frozen=True)
class TracedGPath:
    """A walk through the lower graph realizing a route's anchor chain.

    ``anchor_indices`` marks where each anchor sits inside ``full_nodes``;
    everything in between is auxiliary routing.
    """

    full_nodes: tuple[str, ...]
    anchor_indices: tuple[int, ...]


@dataclass(frozen=True)
class RouteValidity:
    valid: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.valid


_VALID = RouteValidity(True)


def node_pair(hg: HG2, n: str) -> NodePair:
    """The pair of hypernode ``n``: its connected graph node or empty."""
    if n not in hg.h.nodes:
        raise UnknownIdError(f"unknown hypernode {n!r}")
    conn = hg.c.by_node.get(n)
    return NodePair(n, conn.g_node if conn else None)


def edge_pair(hg: HG2, e: str) -> EdgePair:
    """The pair of hyperedge ``e``: its connected graph node or empty."""
    if e not in hg.h.edges_by_id:
        raise UnknownIdError(f"unknown hyperedge {e!r}")
    conn = hg.c.by_edge.get(e)
    return EdgePair(e, conn.g_node if conn else None)


def pairs_of_sequence(hg: HG2, p: Sequence[str]) -> HG2Route:
    """Map any alternating label sequence to pairs, hyperpath or not.

    Useful for checking candidate sequences with validate_route; route_of is
    the strict constructor.
    """
    seq = tuple(p)
    if len(seq) < 3 or len(seq) % 2 == 0:
        raise NotAHyperpathError(f"not an alternating node/edge sequence: {list(p)}")
    pairs: list[Pair] = []
    for i, label in enumerate(seq):
        pairs.append(node_pair(hg, label) if i % 2 == 0 else edge_pair(hg, label))
    return HG2Route(tuple(pairs))


def route_of(hg: HG2, p: Sequence[str]) -> HG2Route:
    """Build the route of a hyperpath by pairing every element."""
    if not is_hyperpath(hg.h, p):
        raise NotAHyperpathError(f"not a hyperpath: {list(p)}")
    return pairs_of_sequence(hg, p)


def anchors(r: HG2Route) -> list[str]:
    """Graph nodes of the route's non-empty pairs, in sequence order."""
    return [p.anchor for p in r.pairs if p.anchor is not None]


def validate_route(hg: HG2, r: HG2Route) -> RouteValidity:
    """Check a route against all four path conditions.

    Invalidity is reported as a result, never raised: (i) the underlying
    sequence must be a hyperpath, (ii) every pair's anchor must agree with
    the connector set, (iii)/(iv) each consecutive anchor pair must be
    joined by some directed path in the lower graph.
    """
    try:
        if not is_hyperpath(hg.h, r.sequence):
            return RouteValidity(False, "not a hyperpath")
    except UnknownIdError as exc:
        return RouteValidity(False, str(exc))

    for pair in r.pairs:
        if isinstance(pair, NodePair):
            expected = node_pair(hg, pair.h_node).anchor
        else:
            expected = edge_pair(hg, pair.h_edge).anchor
        if pair.anchor != expected:
            return RouteValidity(
                False,
                f"pair {pair} disagrees with connectors (expected anchor {expected or 'none'})",
            )

    chain = anchors(r)
    for x, y in zip(chain, chain[1:]):
        if not path_exists(hg.g, x, y):
            return RouteValidity(False, f"no path {x}→{y} in G")
    return _VALID


def enumerate_routes(hg: HG2, s: str, t: str) -> list[HG2Route]:
    """All valid routes between two hypernodes, in hyperpath order.

    Carriers are the elementary hyperpaths; each is paired up and kept only
    if it survives validate_route.
    """
    routes = []
    for p in enumerate_hyperpaths(hg.h, s, t, "elementary_only"):
        r = route_of(hg, p)
        if validate_route(hg, r):
            routes.append(r)
    return routes


def _segments(t: TracedGPath) -> list[tuple[str, ...]]:
    return [
        t.full_nodes[i : j + 1]
        for i, j in zip(t.anchor_indices, t.anchor_indices[1:])
    ]


def _is_walk(g: Graph, nodes: Sequence[str]) -> bool:
    return all(g.hop_weight(a, b) is not None for a, b in zip(nodes, nodes[1:]))


def _check_trace(hg: HG2, r: HG2Route, t: TracedGPath) -> None:
    """Raise TraceMismatchError unless ``t`` traces ``r`` in hg's graph."""
    chain = anchors(r)
    if not chain:
        if t.full_nodes or t.anchor_indices:
            raise TraceMismatchError("route has no anchors but trace is nonempty")
        return
    idx = t.anchor_indices
    if len(idx) != len(chain):
        raise TraceMismatchError(f"expected {len(chain)} anchor marks, got {len(idx)}")
    if list(idx) != sorted(set(idx)):
        raise TraceMismatchError("anchor positions must be strictly increasing")
    if idx[0] != 0 or idx[-1] != len(t.full_nodes) - 1:
        raise TraceMismatchError("trace must start at the first anchor and end at the last")
    for pos, want in zip(idx, chain):
        if t.full_nodes[pos] != want:
            raise TraceMismatchError(
                f"anchor {want!r} expected at position {pos}, found {t.full_nodes[pos]!r}"
            )
    for label in t.full_nodes:
        if label not in hg.g.nodes:
            raise TraceMismatchError(f"unknown graph node {label!r} in trace")
    if not _is_walk(hg.g, t.full_nodes):
        raise TraceMismatchError("trace is not a walk in G")


def trace_gpaths(hg: HG2, r: HG2Route, max_hops: int) -> list[TracedGPath]:
    """Every realization of a route's anchor chain by per-segment paths.

    Each segment between consecutive anchors ranges over the node-simple
    paths of at most ``max_hops`` edges; choices combine by cross product
    in lexicographic segment order. Segments may share nodes, so a traced
    walk can revisit a node even though each segment cannot.
    """
    validity = validate_route(hg, r)
    if not validity:
        raise InvalidRouteError(f"route is invalid: {validity.reason}")
    chain = anchors(r)
    if not chain:
        return [TracedGPath((), ())]
    if len(chain) == 1:
        return [TracedGPath((chain[0],), (0,))]

    per_segment = [
        enumerate_paths(hg.g, x, y, max_hops) for x, y in zip(chain, chain[1:])
    ]
    if any(not seg for seg in per_segment):
        return []

    traces = []
    for choice in product(*per_segment):
        nodes = list(choice[0].nodes)
        marks = [0, len(nodes) - 1]
        for seg in choice[1:]:
            nodes.extend(seg.nodes[1:])
            marks.append(len(nodes) - 1)
        traces.append(TracedGPath(tuple(nodes), tuple(marks)))
    return traces


def trace_from_nodes(hg: HG2, r: HG2Route, nodes: Sequence[str]) -> TracedGPath:
    """Interpret a bare node walk as a trace of ``r``.

    Anchor positions are recovered by backtracking over occurrences; raises
    InvalidTraceError if the walk is not realizable in the graph and
    TraceMismatchError if the anchors cannot be matched.
    """
    walk = tuple(nodes)
    for label in walk:
        if label not in hg.g.nodes:
            raise UnknownIdError(f"unknown graph node {label!r}")
    if not _is_walk(hg.g, walk):
        raise InvalidTraceError(f"not a walk in G: {list(walk)}")
    chain = anchors(r)
    if not chain:
        if walk:
            raise TraceMismatchError("route has no anchors but trace is nonempty")
        return TracedGPath((), ())

    def match(k: int, start: int) -> tuple[int, ...] | None:
        if k == len(chain):
            return ()
        last = k == len(chain) - 1
        for pos in range(start, len(walk)):
            if walk[pos] != chain[k]:
                continue
            if k == 0 and pos != 0:
                break  # first anchor must open the walk
            if last and pos != len(walk) - 1:
                continue
            rest = match(k + 1, pos + 1)
            if rest is not None:
                return (pos,) + rest
        return None

    marks = match(0, 0)
    if marks is None:
        raise TraceMismatchError(
            f"walk {list(walk)} does not trace anchors {chain}"
        )
    return TracedGPath(walk, marks)


def has_gloop(t: TracedGPath) -> bool:
    """True iff the traced walk visits some graph node twice."""
    return len(set(t.full_nodes)) < len(t.full_nodes)


class NodeRole(Enum):
    PARTICIPATING = "Participating"
    AUXILIARY_CASE1 = "Auxiliary(case 1)"
    AUXILIARY_CASE2 = "Auxiliary(case 2)"
    AUXILIARY_CASE3 = "Auxiliary(case 3)"

    def __str__(self) -> str:
        return self.value


def classify_nodes(hg: HG2, r: HG2Route, t: TracedGPath) -> dict[str, NodeRole]:
    """Role of every graph node in a trace.

    Anchors of the route's pairs are participating; the rest are auxiliary,
    split by their connectors: none at all (case 1), connectors pointing
    outside the route (case 2), or into it (case 3). With one connector per
    source, case 3 cannot arise from routes built by route_of, since such a
    node would be an anchor; it remains reachable for hand-built pair
    sequences.
    """
    _check_trace(hg, r, t)
    participating = set(anchors(r))
    members = r.hypernodes | r.hyperedges

    roles: dict[str, NodeRole] = {}
    for label in sorted(set(t.full_nodes)):
        if label in participating:
            roles[label] = NodeRole.PARTICIPATING
            continue
        conns = hg.c.touching.get(label, ())
        if not conns:
            roles[label] = NodeRole.AUXILIARY_CASE1
            continue
        sources = {
            c.h_node if isinstance(c, NodeConnector) else c.h_edge for c in conns
        }
        if sources & members:
            roles[label] = NodeRole.AUXILIARY_CASE3
        else:
            roles[label] = NodeRole.AUXILIARY_CASE2
    return roles
