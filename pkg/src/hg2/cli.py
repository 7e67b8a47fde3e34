"""Command-line front end over JSON instance files.

Subcommands: validate, routes, check, mincost, classify, dot. Exit codes:
0 for success/Valid, 1 for Invalid or no-route results, 2 for usage and
load errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import io as hgio
from .core import (
    HG2,
    HG2Route,
    TracedGPath,
    classify_nodes,
    enumerate_routes,
    format_route,
    pairs_of_sequence,
    trace_from_nodes,
    trace_gpaths,
    validate_route,
)
from .cost import min_cost_path
from .errors import (
    DegenerateQueryError,
    Hg2Error,
    NotAHyperpathError,
    TraceMismatchError,
    UnknownIdError,
)
from .hyper import Weight


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hg2",
        description="Inspect layered hypergraph-graph instances stored as JSON.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="load a file and report OK or the first error")
    p.add_argument("file")

    p = sub.add_parser("routes", help="list valid routes between two hypernodes")
    p.add_argument("file")
    p.add_argument("--from", dest="source", required=True, metavar="S")
    p.add_argument("--to", dest="target", required=True, metavar="T")
    p.add_argument("--json", action="store_true", dest="as_json")

    p = sub.add_parser("check", help="validate one route given as N1,E1,N2,...")
    p.add_argument("file")
    p.add_argument("--route", required=True)

    p = sub.add_parser("mincost", help="least-cost route and traced path")
    p.add_argument("file")
    p.add_argument("--from", dest="source", required=True, metavar="S")
    p.add_argument("--to", dest="target", required=True, metavar="T")
    p.add_argument("--json", action="store_true", dest="as_json")

    p = sub.add_parser("classify", help="participating/auxiliary roles along a trace")
    p.add_argument("file")
    p.add_argument("--route", required=True)
    p.add_argument("--gpath", help="explicit trace as comma-separated graph nodes")

    p = sub.add_parser("dot", help="export the instance as a DOT digraph")
    p.add_argument("file")
    p.add_argument("-o", dest="out", help="write to a file instead of stdout")

    return parser


def _load(path_text: str) -> HG2:
    path = Path(path_text)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise Hg2Error(f"cannot read {path_text}: {exc}") from exc
    return hgio.load(text)


def _fmt_num(value: Weight) -> Weight:
    if isinstance(value, float) and value.is_integer():
        return int(value)
    return value


def _parse_route(hg: HG2, text: str) -> HG2Route | str:
    """Turn 'N1,E1,N2,...' into a route, or return an invalidity reason."""
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    try:
        return pairs_of_sequence(hg, tokens)
    except NotAHyperpathError:
        return "not a hyperpath"
    except UnknownIdError as exc:
        return str(exc)


def _cmd_validate(hg: HG2, ns: argparse.Namespace) -> int:
    print("OK")
    return 0


def _cmd_routes(hg: HG2, ns: argparse.Namespace) -> int:
    routes = enumerate_routes(hg, ns.source, ns.target)
    if ns.as_json:
        print(json.dumps({"routes": [format_route(r) for r in routes]}))
    else:
        for r in routes:
            print(format_route(r))
        if not routes:
            print(f"no valid route from {ns.source} to {ns.target}")
    return 0 if routes else 1


def _cmd_check(hg: HG2, ns: argparse.Namespace) -> int:
    route = _parse_route(hg, ns.route)
    if isinstance(route, str):
        print(f"Invalid: {route}")
        return 1
    validity = validate_route(hg, route)
    if validity:
        print("Valid")
        return 0
    print(f"Invalid: {validity.reason}")
    return 1


def _cmd_mincost(hg: HG2, ns: argparse.Namespace) -> int:
    answer = min_cost_path(hg, ns.source, ns.target)
    if answer is None:
        print(f"no valid route from {ns.source} to {ns.target}")
        return 1
    b = answer.breakdown
    fields = {
        "route": format_route(answer.route),
        "gpath": list(answer.trace.full_nodes),
        "route_cost": _fmt_num(b.route_cost),
        "gpath_cost": _fmt_num(b.gpath_cost),
        "connector_cost": _fmt_num(b.connector_cost),
        "total": _fmt_num(b.total),
    }
    if ns.as_json:
        print(json.dumps(fields))
    else:
        print(f"route: {fields['route']}")
        print(f"gpath: {','.join(answer.trace.full_nodes)}")
        for key in ("route_cost", "gpath_cost", "connector_cost", "total"):
            print(f"{key}: {fields[key]}")
    return 0


def _cmd_classify(hg: HG2, ns: argparse.Namespace) -> int:
    route = _parse_route(hg, ns.route)
    if isinstance(route, str):
        print(f"Invalid: {route}")
        return 1
    validity = validate_route(hg, route)
    if not validity:
        print(f"Invalid: {validity.reason}")
        return 1
    trace: TracedGPath
    if ns.gpath:
        nodes = [t.strip() for t in ns.gpath.split(",") if t.strip()]
        try:
            trace = trace_from_nodes(hg, route, nodes)
        except Hg2Error as exc:
            print(f"Invalid: {exc}")
            return 1
    else:
        traces = trace_gpaths(hg, route, max_hops=len(hg.g.nodes))
        if not traces:
            print("Invalid: route has no traced path within the hop bound")
            return 1
        trace = traces[0]
    for label, role in classify_nodes(hg, route, trace).items():
        print(f"{label}: {role}")
    return 0


def _cmd_dot(hg: HG2, ns: argparse.Namespace) -> int:
    text = hgio.export_dot(hg)
    if ns.out:
        Path(ns.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


_HANDLERS = {
    "validate": _cmd_validate,
    "routes": _cmd_routes,
    "check": _cmd_check,
    "mincost": _cmd_mincost,
    "classify": _cmd_classify,
    "dot": _cmd_dot,
}


def run_cli(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        hg = _load(ns.file)
    except Hg2Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        return _HANDLERS[ns.command](hg, ns)
    except (UnknownIdError, DegenerateQueryError, TraceMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run_cli())
