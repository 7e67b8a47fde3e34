"""Brute-force reference computations used as test oracles.

Everything here works on plain instance descriptions and stays independent
of the library's search code: hyperpaths are generated positionally from the
head/tail definition, reachability is a local BFS, and least-cost answers
come from exhaustive (route, trace) cross products.

An instance description is a dict with:
    hnodes: list[str]
    hedges: list[(id, set_of_head_labels, set_of_tail_labels, weight)]
    gnodes: list[str]
    gedges: list[(src, dst, weight)]
    vconn:  dict h_node -> (g_node, weight)
    econn:  dict h_edge -> (g_node, weight)
"""

from collections import deque
from itertools import product


def hyperpath_ok(inst, seq):
    """Check the head/tail step rule directly on an alternating sequence."""
    if len(seq) < 3 or len(seq) % 2 == 0:
        return False
    by_id = {e[0]: e for e in inst["hedges"]}
    for i in range(0, len(seq) - 1, 2):
        node, edge_id, nxt = seq[i], seq[i + 1], seq[i + 2]
        if edge_id not in by_id:
            return False
        _, head, tail, _ = by_id[edge_id]
        if node not in head or nxt not in tail:
            return False
    return True


def all_hyperpaths(inst, s, t, policy="elementary_only"):
    """Enumerate s->t hyperpaths by trying every edge tuple positionally.

    For each edge-id tuple of length q the node slots are filled from the
    per-position candidate sets the definition admits (first slot s, interior
    slots tail(E_i) & head(E_{i+1}), last slot t), then every filled sequence
    is re-checked with hyperpath_ok and the policy filter.
    """
    by_id = {e[0]: e for e in inst["hedges"]}
    edge_ids = sorted(by_id)
    max_q = len(inst["hnodes"]) - 1 if policy == "elementary_only" else len(edge_ids)
    found = set()
    for q in range(1, max_q + 1):
        for combo in product(edge_ids, repeat=q):
            slots = []
            first_head = by_id[combo[0]][1]
            slots.append([s] if s in first_head else [])
            for i in range(1, q):
                tail_prev = by_id[combo[i - 1]][2]
                head_next = by_id[combo[i]][1]
                slots.append(sorted(tail_prev & head_next))
            last_tail = by_id[combo[-1]][2]
            slots.append([t] if t in last_tail else [])
            for nodes in product(*slots):
                seq = [None] * (2 * q + 1)
                seq[0::2] = nodes
                seq[1::2] = combo
                if not hyperpath_ok(inst, seq):
                    continue
                if policy == "elementary_only" and len(set(nodes)) != len(nodes):
                    continue
                if policy == "simple_only" and len(set(combo)) != len(combo):
                    continue
                found.add(tuple(seq))
    return sorted(found, key=lambda p: (p[1::2], p[0::2]))


def reachable(inst, u, v):
    """BFS reachability over the lower-layer edges; u == v counts."""
    if u == v:
        return True
    adj = {}
    for src, dst, _ in inst["gedges"]:
        adj.setdefault(src, set()).add(dst)
    seen, queue = {u}, deque([u])
    while queue:
        cur = queue.popleft()
        for nxt in adj.get(cur, ()):
            if nxt == v:
                return True
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return False


def pair_sequence(inst, seq):
    """Map an alternating sequence to (kind, member, anchor) pair triples."""
    pairs = []
    for i, label in enumerate(seq):
        if i % 2 == 0:
            conn = inst["vconn"].get(label)
            pairs.append(("v", label, conn[0] if conn else None))
        else:
            conn = inst["econn"].get(label)
            pairs.append(("e", label, conn[0] if conn else None))
    return pairs


def anchor_list(pairs):
    return [a for _, _, a in pairs if a is not None]


def all_routes(inst, s, t):
    """Valid routes: elementary hyperpaths whose anchor chain is reachable."""
    routes = []
    for seq in all_hyperpaths(inst, s, t, "elementary_only"):
        pairs = pair_sequence(inst, seq)
        chain = anchor_list(pairs)
        if all(reachable(inst, x, y) for x, y in zip(chain, chain[1:])):
            routes.append((seq, pairs))
    return routes


def simple_gpaths(inst, u, v, max_hops):
    """All node-simple u->v paths with at most max_hops edges, sorted."""
    adj = {}
    for src, dst, _ in inst["gedges"]:
        adj.setdefault(src, set()).add(dst)
    out = []

    def walk(path):
        cur = path[-1]
        if cur == v:
            out.append(tuple(path))
            return
        if len(path) - 1 >= max_hops:
            return
        for nxt in sorted(adj.get(cur, ())):
            if nxt not in path:
                walk(path + [nxt])

    if u in inst["gnodes"] and v in inst["gnodes"]:
        walk([u])
    return sorted(out)


def min_hop_weight(inst):
    """Cheapest weight per (src, dst); parallel edges collapse to the min."""
    w = {}
    for src, dst, weight in inst["gedges"]:
        key = (src, dst)
        if key not in w or weight < w[key]:
            w[key] = weight
    return w


def walk_cost(inst, nodes):
    w = min_hop_weight(inst)
    return sum(w[(a, b)] for a, b in zip(nodes, nodes[1:]))


def route_edge_cost(inst, seq):
    by_id = {e[0]: e for e in inst["hedges"]}
    return sum(by_id[eid][3] for eid in seq[1::2])


def connector_cost_of(inst, pairs):
    """Weights of the distinct connectors realizing anchored pairs."""
    realized = set()
    for kind, member, anchor in pairs:
        if anchor is not None:
            realized.add((kind, member))
    total = 0
    for kind, member in realized:
        total += (inst["vconn"] if kind == "v" else inst["econn"])[member][1]
    return total


def traces_of(inst, pairs, max_hops):
    """Every concatenation of per-segment simple paths, with anchor marks."""
    chain = anchor_list(pairs)
    if len(chain) == 0:
        return [((), ())]
    if len(chain) == 1:
        return [((chain[0],), (0,))]
    per_segment = [
        simple_gpaths(inst, x, y, max_hops) for x, y in zip(chain, chain[1:])
    ]
    if any(not seg for seg in per_segment):
        return []
    results = []
    for choice in product(*per_segment):
        nodes = list(choice[0])
        marks = [0, len(nodes) - 1]
        for seg in choice[1:]:
            nodes.extend(seg[1:])
            marks.append(len(nodes) - 1)
        results.append((tuple(nodes), tuple(marks)))
    return results


def min_total_cost(inst, s, t):
    """Exhaustive minimum of route + gpath + connector over all choices.

    Returns (total, route_seq, trace_nodes, breakdown_triple) or None.
    """
    best = None
    max_hops = len(inst["gnodes"])
    for seq, pairs in all_routes(inst, s, t):
        rc = route_edge_cost(inst, seq)
        cc = connector_cost_of(inst, pairs)
        for nodes, _marks in traces_of(inst, pairs, max_hops):
            gc = walk_cost(inst, nodes)
            total = rc + gc + cc
            if best is None or total < best[0]:
                best = (total, seq, nodes, (rc, gc, cc))
    return best
