"""JSON interchange and DOT rendering.

Document layout::

    {
      "hypergraph": {"nodes": [...],
                     "edges": [{"id", "head", "tail", "weight"?}, ...]},
      "graph":      {"nodes": [...],
                     "edges": [{"src", "dst", "weight"?}, ...]},
      "connectors": {"node": [{"h", "g", "weight"?}, ...],
                     "edge": [{"h", "g", "weight"?}, ...]}
    }

Weights default to 1. Saving is canonical: keys sorted, lists sorted by
id/label, integral weights rendered without a fractional part, so equal
structures serialize byte-identically.

Errors carry a JSON-pointer-style path: ParseError for malformed JSON,
SchemaError for shape problems (missing/extra/wrongly typed fields),
SemanticError for well-shaped documents that violate a structural rule.
"""

from __future__ import annotations

import json
from typing import Any

from .core import HG2, ConnectorSet, EdgeConnector, NodeConnector, build_hg2
from .errors import (
    DanglingConnectorError,
    DuplicateEdgeError,
    DuplicateNodeError,
    DuplicateSourceConnectorError,
    EmptyHeadOrTailError,
    HeadTailOverlapError,
    Hg2Error,
    NegativeWeightError,
    ParseError,
    SchemaError,
    SemanticError,
    UnknownVertexError,
)
from .graph import build_graph
from .hyper import Weight, build_hypergraph

_SECTIONS = ("hypergraph", "graph", "connectors")


def _obj(value: Any, path: str, keys: tuple[str, ...], optional: tuple[str, ...] = ()) -> dict:
    if not isinstance(value, dict):
        raise SchemaError(f"expected an object, got {type(value).__name__}", path)
    for key in keys:
        if key not in value:
            raise SchemaError(f"missing field {key!r}", path)
    for key in value:
        if key not in keys and key not in optional:
            raise SchemaError(f"unexpected field {key!r}", path)
    return value


def _lst(value: Any, path: str) -> list:
    if not isinstance(value, list):
        raise SchemaError(f"expected a list, got {type(value).__name__}", path)
    return value


def _label(value: Any, path: str) -> str:
    if not isinstance(value, str) or not value:
        raise SchemaError("expected a nonempty string", path)
    return value


def _weight(obj: dict, path: str) -> Weight:
    value = obj.get("weight", 1)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError("weight must be a number", f"{path}/weight")
    if value < 0:
        raise SemanticError(
            f"negative weight {value}", f"{path}/weight",
            cause=NegativeWeightError(f"negative weight {value}"),
        )
    return value


def _labels(raw: list, path: str) -> list[str]:
    out = []
    seen = set()
    for i, item in enumerate(raw):
        label = _label(item, f"{path}/{i}")
        if label in seen:
            raise SemanticError(
                f"duplicate label {label!r}", f"{path}/{i}",
                cause=DuplicateNodeError(f"duplicate label {label!r}"),
            )
        seen.add(label)
        out.append(label)
    return out


def load(text: str) -> HG2:
    """Parse and validate a document, returning the built structure."""
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc
    except _NonFiniteNumber as exc:
        raise ParseError(str(exc)) from None

    _obj(doc, "", _SECTIONS)

    hyper_doc = _obj(doc["hypergraph"], "/hypergraph", ("nodes", "edges"))
    hnodes = _labels(_lst(hyper_doc["nodes"], "/hypergraph/nodes"), "/hypergraph/nodes")
    hedges = []
    seen_edge_ids = set()
    for i, item in enumerate(_lst(hyper_doc["edges"], "/hypergraph/edges")):
        path = f"/hypergraph/edges/{i}"
        edge = _obj(item, path, ("id", "head", "tail"), optional=("weight",))
        eid = _label(edge["id"], f"{path}/id")
        if eid in seen_edge_ids:
            raise SemanticError(
                f"duplicate hyperedge id {eid!r}", f"{path}/id",
                cause=DuplicateEdgeError(f"duplicate hyperedge id {eid!r}"),
            )
        seen_edge_ids.add(eid)
        head = _labels(_lst(edge["head"], f"{path}/head"), f"{path}/head")
        tail = _labels(_lst(edge["tail"], f"{path}/tail"), f"{path}/tail")
        if not head or not tail:
            raise SemanticError(
                "head and tail must be nonempty", path,
                cause=EmptyHeadOrTailError("head and tail must be nonempty"),
            )
        overlap = set(head) & set(tail)
        if overlap:
            raise SemanticError(
                f"head and tail overlap on {sorted(overlap)}", path,
                cause=HeadTailOverlapError(f"head and tail overlap on {sorted(overlap)}"),
            )
        for member in head + tail:
            if member not in hnodes:
                raise SemanticError(
                    f"unknown hypernode {member!r}", path,
                    cause=UnknownVertexError(f"unknown hypernode {member!r}"),
                )
        hedges.append((eid, head, tail, _weight(edge, path)))

    graph_doc = _obj(doc["graph"], "/graph", ("nodes", "edges"))
    gnodes = _labels(_lst(graph_doc["nodes"], "/graph/nodes"), "/graph/nodes")
    gnode_set = set(gnodes)
    gedges = []
    for i, item in enumerate(_lst(graph_doc["edges"], "/graph/edges")):
        path = f"/graph/edges/{i}"
        edge = _obj(item, path, ("src", "dst"), optional=("weight",))
        src = _label(edge["src"], f"{path}/src")
        dst = _label(edge["dst"], f"{path}/dst")
        for endpoint, field in ((src, "src"), (dst, "dst")):
            if endpoint not in gnode_set:
                raise SemanticError(
                    f"unknown graph node {endpoint!r}", f"{path}/{field}",
                    cause=UnknownVertexError(f"unknown graph node {endpoint!r}"),
                )
        gedges.append((src, dst, _weight(edge, path)))

    conn_doc = _obj(doc["connectors"], "/connectors", ("node", "edge"))
    node_conns = []
    seen_sources: set[str] = set()
    for i, item in enumerate(_lst(conn_doc["node"], "/connectors/node")):
        path = f"/connectors/node/{i}"
        conn = _obj(item, path, ("h", "g"), optional=("weight",))
        h = _label(conn["h"], f"{path}/h")
        g = _label(conn["g"], f"{path}/g")
        if h not in hnodes:
            raise SemanticError(
                f"unknown hypernode {h!r}", f"{path}/h",
                cause=DanglingConnectorError(f"unknown hypernode {h!r}"),
            )
        if g not in gnode_set:
            raise SemanticError(
                f"unknown graph node {g!r}", f"{path}/g",
                cause=DanglingConnectorError(f"unknown graph node {g!r}"),
            )
        if h in seen_sources:
            raise SemanticError(
                f"hypernode {h!r} already has a connector", f"{path}/h",
                cause=DuplicateSourceConnectorError(f"hypernode {h!r} already has a connector"),
            )
        seen_sources.add(h)
        node_conns.append(NodeConnector(h, g, _weight(conn, path)))

    edge_conns = []
    seen_sources = set()
    for i, item in enumerate(_lst(conn_doc["edge"], "/connectors/edge")):
        path = f"/connectors/edge/{i}"
        conn = _obj(item, path, ("h", "g"), optional=("weight",))
        h = _label(conn["h"], f"{path}/h")
        g = _label(conn["g"], f"{path}/g")
        if h not in seen_edge_ids:
            raise SemanticError(
                f"unknown hyperedge {h!r}", f"{path}/h",
                cause=DanglingConnectorError(f"unknown hyperedge {h!r}"),
            )
        if g not in gnode_set:
            raise SemanticError(
                f"unknown graph node {g!r}", f"{path}/g",
                cause=DanglingConnectorError(f"unknown graph node {g!r}"),
            )
        if h in seen_sources:
            raise SemanticError(
                f"hyperedge {h!r} already has a connector", f"{path}/h",
                cause=DuplicateSourceConnectorError(f"hyperedge {h!r} already has a connector"),
            )
        seen_sources.add(h)
        edge_conns.append(EdgeConnector(h, g, _weight(conn, path)))

    try:
        return build_hg2(
            build_hypergraph(hnodes, hedges),
            build_graph(gnodes, gedges),
            ConnectorSet(tuple(node_conns), tuple(edge_conns)),
        )
    except Hg2Error as exc:  # the prechecks above should have caught it
        raise SemanticError(str(exc), "", cause=exc) from exc


class _NonFiniteNumber(ValueError):
    pass


def _reject_constant(token: str) -> float:
    raise _NonFiniteNumber(f"non-finite number {token!r} is not valid JSON")


def _num(w: Weight) -> Weight:
    # integral floats render as ints: no trailing zeros in the document
    if isinstance(w, float) and w.is_integer():
        return int(w)
    return w


def save(hg: HG2) -> str:
    """Serialize to the canonical document text (stable byte-for-byte)."""
    doc = {
        "hypergraph": {
            "nodes": sorted(hg.h.nodes),
            "edges": [
                {
                    "id": e.id,
                    "head": sorted(e.head),
                    "tail": sorted(e.tail),
                    "weight": _num(e.weight),
                }
                for e in sorted(hg.h.edges, key=lambda e: e.id)
            ],
        },
        "graph": {
            "nodes": sorted(hg.g.nodes),
            "edges": [
                {"src": e.src, "dst": e.dst, "weight": _num(e.weight)}
                for e in sorted(hg.g.edges, key=lambda e: (e.src, e.dst, e.weight))
            ],
        },
        "connectors": {
            "node": [
                {"h": c.h_node, "g": c.g_node, "weight": _num(c.weight)}
                for c in sorted(hg.c.node_connectors, key=lambda c: c.h_node)
            ],
            "edge": [
                {"h": c.h_edge, "g": c.g_node, "weight": _num(c.weight)}
                for c in sorted(hg.c.edge_connectors, key=lambda c: c.h_edge)
            ],
        },
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _quote(name: str) -> str:
    escaped = name.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def export_dot(hg: HG2) -> str:
    """Render the structure as a DOT digraph.

    Hyperedges expand to one box node each, entered from their head nodes
    and leaving into their tail nodes. Node connectors are dashed arcs and
    edge connectors bold arcs, drawn upper layer to lower layer only, which
    is the direction dependency actually flows.
    """
    lines = [
        "digraph hg2 {",
        "  // connectors point from the hypergraph layer to the graph layer",
    ]
    if hg.h.nodes or hg.h.edges:
        lines.append("  subgraph cluster_hypergraph {")
        lines.append('    label="hypergraph";')
        for n in sorted(hg.h.nodes):
            lines.append(f"    {_quote('h_' + n)} [label={_quote(n)}];")
        for e in sorted(hg.h.edges, key=lambda e: e.id):
            lines.append(
                f"    {_quote('he_' + e.id)} [label={_quote(e.id)}, shape=box];"
            )
        for e in sorted(hg.h.edges, key=lambda e: e.id):
            for n in sorted(e.head):
                lines.append(f"    {_quote('h_' + n)} -> {_quote('he_' + e.id)};")
            for n in sorted(e.tail):
                lines.append(f"    {_quote('he_' + e.id)} -> {_quote('h_' + n)};")
        lines.append("  }")
    if hg.g.nodes:
        lines.append("  subgraph cluster_graph {")
        lines.append('    label="graph";')
        for n in sorted(hg.g.nodes):
            lines.append(f"    {_quote('g_' + n)} [label={_quote(n)}];")
        for e in sorted(hg.g.edges, key=lambda e: (e.src, e.dst, e.weight)):
            lines.append(
                f"    {_quote('g_' + e.src)} -> {_quote('g_' + e.dst)}"
                f" [label={_quote(str(_num(e.weight)))}];"
            )
        lines.append("  }")
    for c in sorted(hg.c.node_connectors, key=lambda c: c.h_node):
        lines.append(
            f"  {_quote('h_' + c.h_node)} -> {_quote('g_' + c.g_node)}"
            f" [style=dashed, label={_quote(str(_num(c.weight)))}];"
        )
    for c in sorted(hg.c.edge_connectors, key=lambda c: c.h_edge):
        lines.append(
            f"  {_quote('he_' + c.h_edge)} -> {_quote('g_' + c.g_node)}"
            f" [style=bold, label={_quote(str(_num(c.weight)))}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
