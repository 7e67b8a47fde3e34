"""Lower layer: a directed weighted graph with path queries.

Parallel edges are allowed; wherever a path is identified by its node
sequence, the cheapest edge between two consecutive nodes is the one charged.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import (
    DuplicateNodeError,
    NegativeWeightError,
    UnknownEndpointError,
    UnknownIdError,
)
from .hyper import Weight, _check_label


@dataclass(frozen=True)
class GraphEdge:
    src: str
    dst: str
    weight: Weight


@dataclass(frozen=True)
class Graph:
    nodes: frozenset[str]
    edges: tuple[GraphEdge, ...]

    @cached_property
    def successors(self) -> dict[str, tuple[tuple[str, Weight], ...]]:
        """node -> ((successor, cheapest weight), ...) sorted by successor."""
        best: dict[str, dict[str, Weight]] = {n: {} for n in self.nodes}
        for e in self.edges:
            cur = best[e.src].get(e.dst)
            if cur is None or e.weight < cur:
                best[e.src][e.dst] = e.weight
        return {
            n: tuple(sorted(out.items()))
            for n, out in best.items()
        }

    def hop_weight(self, src: str, dst: str) -> Weight | None:
        """Cheapest edge weight from src to dst, or None if absent."""
        for node, w in self.successors.get(src, ()):
            if node == dst:
                return w
        return None


@dataclass(frozen=True)
class GPath:
    """A path as a node sequence plus the weight of its chosen edges."""

    nodes: tuple[str, ...]
    total_weight: Weight


def build_graph(
    nodes: Iterable[str],
    edges: Iterable[tuple[str, str, Weight]],
) -> Graph:
    """Validate and assemble a directed graph from (src, dst, weight) rows."""
    node_set: set[str] = set()
    for label in nodes:
        _check_label(label, "graph node label")
        if label in node_set:
            raise DuplicateNodeError(f"duplicate graph node {label!r}")
        node_set.add(label)

    built: list[GraphEdge] = []
    for src, dst, weight in edges:
        if src not in node_set:
            raise UnknownEndpointError(f"edge source {src!r} is not a declared node")
        if dst not in node_set:
            raise UnknownEndpointError(f"edge target {dst!r} is not a declared node")
        if not weight >= 0:
            raise NegativeWeightError(f"edge {src!r}->{dst!r} has negative weight {weight!r}")
        built.append(GraphEdge(src, dst, weight))

    return Graph(frozenset(node_set), tuple(built))


def _check_nodes(g: Graph, *labels: str) -> None:
    for label in labels:
        if label not in g.nodes:
            raise UnknownIdError(f"unknown graph node {label!r}")


def path_exists(g: Graph, u: str, v: str) -> bool:
    """Directed reachability; u == v holds via the zero-length path."""
    _check_nodes(g, u, v)
    if u == v:
        return True
    seen = {u}
    queue = deque([u])
    while queue:
        cur = queue.popleft()
        for nxt, _ in g.successors[cur]:
            if nxt == v:
                return True
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return False


def shortest_path(g: Graph, u: str, v: str) -> GPath | None:
    """Minimum-weight node-simple path from u to v, or None if unreachable.

    Among equal-weight paths the lexicographically smallest node sequence
    wins, so the search carries whole paths in the frontier and keeps
    equal-cost alternatives alive until the target pops.
    """
    _check_nodes(g, u, v)
    frontier: list[tuple[Weight, tuple[str, ...]]] = [(0, (u,))]
    best_cost: dict[str, Weight] = {u: 0}
    while frontier:
        cost, path = heapq.heappop(frontier)
        cur = path[-1]
        if cur == v:
            return GPath(path, cost)
        for nxt, w in g.successors[cur]:
            if nxt in path:
                continue
            nxt_cost = cost + w
            known = best_cost.get(nxt)
            if known is not None and nxt_cost > known:
                continue
            best_cost[nxt] = nxt_cost if known is None else min(known, nxt_cost)
            heapq.heappush(frontier, (nxt_cost, path + (nxt,)))
    return None


def enumerate_paths(g: Graph, u: str, v: str, max_hops: int) -> list[GPath]:
    """All node-simple u->v paths with at most max_hops edges.

    Returned in lexicographic order of node sequence; includes the
    zero-length path when u == v.
    """
    _check_nodes(g, u, v)
    if max_hops < 1:
        raise ValueError(f"max_hops must be positive, got {max_hops}")

    results: list[GPath] = []
    path: list[str] = [u]
    on_path = {u}

    def walk(cost: Weight) -> None:
        cur = path[-1]
        if cur == v:
            # no simple path can leave v and come back
            results.append(GPath(tuple(path), cost))
            return
        if len(path) - 1 >= max_hops:
            return
        for nxt, w in g.successors[cur]:
            if nxt in on_path:
                continue
            path.append(nxt)
            on_path.add(nxt)
            walk(cost + w)
            on_path.discard(nxt)
            path.pop()

    walk(0)
    results.sort(key=lambda p: p.nodes)
    return results
