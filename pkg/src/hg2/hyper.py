"""Upper layer: a directed hypergraph with head/tail hyperedges.

A hyperedge is entered at one of its head nodes and left at one of its tail
nodes, so a hyperpath is an alternating sequence n1, E1, n2, ..., Eq, n_{q+1}
with n_i in head(E_i) and n_{i+1} in tail(E_i) for every step.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Literal, Sequence

from .errors import (
    DegenerateQueryError,
    DuplicateEdgeError,
    DuplicateNodeError,
    EmptyHeadOrTailError,
    HeadTailOverlapError,
    NegativeWeightError,
    NotAHyperpathError,
    UnknownIdError,
    UnknownVertexError,
)

Weight = int | float

#: A hyperpath as stored/returned: node and edge labels, alternating.
Hyperpath = tuple[str, ...]

Policy = Literal["elementary_only", "simple_only"]


@dataclass(frozen=True)
class HyperEdge:
    """Directed hyperedge: disjoint nonempty head and tail node sets."""

    id: str
    head: frozenset[str]
    tail: frozenset[str]
    weight: Weight

    @property
    def vertices(self) -> frozenset[str]:
        return self.head | self.tail


@dataclass(frozen=True)
class Hypergraph:
    nodes: frozenset[str]
    edges: tuple[HyperEdge, ...]

    @cached_property
    def edges_by_id(self) -> dict[str, HyperEdge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def _edges_leaving(self) -> dict[str, tuple[HyperEdge, ...]]:
        # node -> hyperedges that can be entered there, sorted by id
        out: dict[str, list[HyperEdge]] = {n: [] for n in self.nodes}
        for edge in sorted(self.edges, key=lambda e: e.id):
            for n in edge.head:
                out[n].append(edge)
        return {n: tuple(es) for n, es in out.items()}


def _check_label(label: object, what: str) -> str:
    if not isinstance(label, str) or not label:
        raise ValueError(f"{what} must be a nonempty string, got {label!r}")
    return label


def build_hypergraph(
    nodes: Iterable[str],
    edges: Iterable[tuple[str, Iterable[str], Iterable[str], Weight]],
) -> Hypergraph:
    """Validate and assemble a hypergraph.

    ``edges`` holds (id, head labels, tail labels, weight) tuples. Head and
    tail must be nonempty and disjoint, every member must be a declared node,
    and weights must be nonnegative.
    """
    node_set: set[str] = set()
    for label in nodes:
        _check_label(label, "node label")
        if label in node_set:
            raise DuplicateNodeError(f"duplicate hypernode {label!r}")
        node_set.add(label)

    built: list[HyperEdge] = []
    seen_ids: set[str] = set()
    for edge_id, head, tail, weight in edges:
        _check_label(edge_id, "hyperedge id")
        if edge_id in seen_ids:
            raise DuplicateEdgeError(f"duplicate hyperedge id {edge_id!r}")
        seen_ids.add(edge_id)
        head_set = frozenset(head)
        tail_set = frozenset(tail)
        if not head_set or not tail_set:
            raise EmptyHeadOrTailError(f"hyperedge {edge_id!r} needs nonempty head and tail")
        overlap = head_set & tail_set
        if overlap:
            raise HeadTailOverlapError(
                f"hyperedge {edge_id!r} has nodes in both head and tail: {sorted(overlap)}"
            )
        for member in head_set | tail_set:
            if member not in node_set:
                raise UnknownVertexError(f"hyperedge {edge_id!r} uses unknown node {member!r}")
        if not weight >= 0:
            raise NegativeWeightError(f"hyperedge {edge_id!r} has negative weight {weight!r}")
        built.append(HyperEdge(edge_id, head_set, tail_set, weight))

    return Hypergraph(frozenset(node_set), tuple(built))


def _split(p: Sequence[str]) -> tuple[tuple[str, ...], tuple[str, ...]]:
    seq = tuple(p)
    return seq[0::2], seq[1::2]


def is_hyperpath(h: Hypergraph, p: Sequence[str]) -> bool:
    """True iff ``p`` follows the head-to-tail step rule in ``h``.

    ``p`` must alternate node, edge id, node, ... with at least one edge;
    anything shorter or even-length is simply not a hyperpath. Labels that
    do not exist in ``h`` raise UnknownIdError.
    """
    seq = tuple(p)
    if len(seq) < 3 or len(seq) % 2 == 0:
        return False
    path_nodes, path_edges = _split(seq)
    for n in path_nodes:
        if n not in h.nodes:
            raise UnknownIdError(f"unknown hypernode {n!r}")
    for eid in path_edges:
        if eid not in h.edges_by_id:
            raise UnknownIdError(f"unknown hyperedge {eid!r}")
    for i in range(0, len(seq) - 1, 2):
        edge = h.edges_by_id[seq[i + 1]]
        if seq[i] not in edge.head or seq[i + 2] not in edge.tail:
            return False
    return True


@dataclass(frozen=True)
class HyperpathTraits:
    elementary: bool
    simple: bool
    has_hloop: bool


def classify_hyperpath(h: Hypergraph, p: Sequence[str]) -> HyperpathTraits:
    """Node-distinctness, edge-distinctness and loop flags for a hyperpath.

    A repeated hypernode is exactly what makes a path non-elementary, so
    ``has_hloop`` is always the negation of ``elementary``.
    """
    if not is_hyperpath(h, p):
        raise NotAHyperpathError(f"not a hyperpath: {list(p)}")
    path_nodes, path_edges = _split(p)
    elementary = len(set(path_nodes)) == len(path_nodes)
    simple = len(set(path_edges)) == len(path_edges)
    return HyperpathTraits(elementary=elementary, simple=simple, has_hloop=not elementary)


def enumerate_hyperpaths(
    h: Hypergraph,
    s: str,
    t: str,
    policy: Policy = "elementary_only",
) -> list[Hyperpath]:
    """All s->t hyperpaths admitted by the policy, deterministically ordered.

    ``elementary_only`` keeps node-distinct paths, ``simple_only`` keeps
    edge-distinct ones; either bound makes the search finite. Results are
    sorted by edge-id sequence, then node sequence.
    """
    if s not in h.nodes:
        raise UnknownIdError(f"unknown hypernode {s!r}")
    if t not in h.nodes:
        raise UnknownIdError(f"unknown hypernode {t!r}")
    if s == t:
        raise DegenerateQueryError(f"source and target coincide: {s!r}")
    if policy not in ("elementary_only", "simple_only"):
        raise ValueError(f"unknown policy {policy!r}")
    elementary = policy == "elementary_only"

    found: list[Hyperpath] = []
    seq: list[str] = [s]
    visited: set[str] = {s}
    used_edges: set[str] = set()

    def extend(current: str) -> None:
        if current == t and len(seq) >= 3:
            found.append(tuple(seq))
            if elementary:
                return  # an elementary path cannot leave t and end at t again
        for edge in h._edges_leaving[current]:
            if not elementary and edge.id in used_edges:
                continue
            for nxt in sorted(edge.tail):
                if elementary and nxt in visited:
                    continue
                seq.append(edge.id)
                seq.append(nxt)
                if elementary:
                    visited.add(nxt)
                else:
                    used_edges.add(edge.id)
                extend(nxt)
                if elementary:
                    visited.discard(nxt)
                else:
                    used_edges.discard(edge.id)
                seq.pop()
                seq.pop()

    extend(s)
    found.sort(key=lambda p: (p[1::2], p[0::2]))
    return found
