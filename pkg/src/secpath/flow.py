"""Minimum-cost flow and the split-vertex routing network.

The network turns "is there an st-path with at most k vertices through
v" into a flow question: each vertex w becomes an arc from node 2w to
node 2w+1 of cost 1 and capacity 1, each edge {u, w} becomes two
zero-cost unit arcs joining the split halves in both directions, a
source (node 2n) injects 2 units at v, and both terminals drain into a
sink (node 2n+1).  A flow of value 2 and cost c then decomposes into two
vertex-disjoint routes that stitch into an st-path through v with c + 1
vertices, and vice versa.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from heapq import heappop, heappush

from .graph import Graph, PathCertificate, VertexRangeError


@dataclass(frozen=True)
class Arc:
    tail: int
    head: int
    capacity: int
    cost: int


@dataclass(frozen=True)
class FlowNetwork:
    """Directed network with integer arc capacities and costs."""

    node_count: int
    arcs: tuple[Arc, ...]
    source: int
    sink: int


@dataclass(frozen=True)
class Flow:
    """A feasible flow: per-arc values aligned with the network's arcs."""

    value: int
    cost: int
    arc_flows: tuple[int, ...]


def split_nodes(v: int) -> tuple[int, int]:
    """(entry, exit) node pair of vertex v in a routing network."""
    return 2 * v, 2 * v + 1


def build_flow_network(g: Graph, s: int, t: int, v: int) -> FlowNetwork:
    """Routing network for st-paths through v.

    Arc order: the n split arcs by vertex, two arcs per edge in sorted
    edge order, the two terminal drains, the injection at v.  That is
    n + 2m + 3 arcs on 2n + 2 nodes.
    """
    for x in (s, t, v):
        if not (0 <= x < g.n):
            raise VertexRangeError(f"vertex {x} outside 0..{g.n - 1}")
    if s == t:
        raise ValueError("terminals must be distinct")
    arcs = [Arc(2 * w, 2 * w + 1, 1, 1) for w in range(g.n)]
    for u, w in g.edges:
        arcs.append(Arc(2 * u + 1, 2 * w, 1, 0))
        arcs.append(Arc(2 * w + 1, 2 * u, 1, 0))
    source, sink = 2 * g.n, 2 * g.n + 1
    arcs.append(Arc(2 * s + 1, sink, 1, 0))
    arcs.append(Arc(2 * t + 1, sink, 1, 0))
    arcs.append(Arc(source, 2 * v + 1, 2, 0))
    return FlowNetwork(2 * g.n + 2, tuple(arcs), source, sink)


def _check_flow(net: FlowNetwork, flow: Flow) -> None:
    # capacity, conservation, and cost bookkeeping; bug guard on every solve
    balance = [0] * net.node_count
    cost = 0
    for arc, f in zip(net.arcs, flow.arc_flows):
        if not (0 <= f <= arc.capacity):
            raise RuntimeError(f"arc flow {f} outside [0, {arc.capacity}]")
        balance[arc.tail] -= f
        balance[arc.head] += f
        cost += f * arc.cost
    for node, b in enumerate(balance):
        if node == net.source:
            if b != -flow.value:
                raise RuntimeError("source imbalance")
        elif node == net.sink:
            if b != flow.value:
                raise RuntimeError("sink imbalance")
        elif b != 0:
            raise RuntimeError(f"flow not conserved at node {node}")
    if cost != flow.cost:
        raise RuntimeError("cost bookkeeping mismatch")


def min_cost_flow(net: FlowNetwork, target_value: int) -> Flow | None:
    """Cheapest flow of exactly target_value units, or None if infeasible.

    Successive shortest augmenting paths with node potentials; all arc
    costs here are nonnegative, so Dijkstra suffices throughout.
    """
    if target_value < 0:
        raise ValueError("target flow value must be nonnegative")
    node_count = net.node_count
    to: list[int] = []
    cap: list[int] = []
    cost: list[int] = []
    out: list[list[int]] = [[] for _ in range(node_count)]
    for arc in net.arcs:
        out[arc.tail].append(len(to))
        to.append(arc.head)
        cap.append(arc.capacity)
        cost.append(arc.cost)
        out[arc.head].append(len(to))
        to.append(arc.tail)
        cap.append(0)
        cost.append(-arc.cost)

    inf = float("inf")
    potential = [0] * node_count
    flowed = 0
    total_cost = 0
    while flowed < target_value:
        dist: list[float] = [inf] * node_count
        dist[net.source] = 0
        parent = [-1] * node_count
        heap: list[tuple[float, int]] = [(0, net.source)]
        while heap:
            d, x = heappop(heap)
            if d > dist[x]:
                continue
            for ai in out[x]:
                if cap[ai] <= 0:
                    continue
                y = to[ai]
                nd = d + cost[ai] + potential[x] - potential[y]
                if nd < dist[y]:
                    dist[y] = nd
                    parent[y] = ai
                    heappush(heap, (nd, y))
        if dist[net.sink] == inf:
            return None
        for node in range(node_count):
            if dist[node] < inf:
                potential[node] += int(dist[node])
        push = target_value - flowed
        x = net.sink
        while x != net.source:
            ai = parent[x]
            push = min(push, cap[ai])
            x = to[ai ^ 1]
        x = net.sink
        while x != net.source:
            ai = parent[x]
            cap[ai] -= push
            cap[ai ^ 1] += push
            total_cost += push * cost[ai]
            x = to[ai ^ 1]
        flowed += push

    flow = Flow(flowed, total_cost, tuple(cap[2 * i + 1] for i in range(len(net.arcs))))
    _check_flow(net, flow)
    return flow


def _stitch_routes(g: Graph, s: int, t: int, v: int, net: FlowNetwork, flow: Flow) -> list[int]:
    # Decompose the 2-unit flow into its two source-to-sink routes and
    # read the visited vertices off the split arcs (split arc i < n
    # belongs to vertex i).  Cycles are impossible: every directed cycle
    # in this network crosses a split arc, which costs 1, so an optimal
    # flow contains none.
    remaining = list(flow.arc_flows)
    out: list[list[int]] = [[] for _ in range(net.node_count)]
    for idx, arc in enumerate(net.arcs):
        if remaining[idx] > 0:
            out[arc.tail].append(idx)
    legs: list[tuple[list[int], int]] = []
    for _ in range(2):
        node = 2 * v + 1
        visited: list[int] = []
        while node != net.sink:
            idx = next(i for i in out[node] if remaining[i] > 0)
            remaining[idx] -= 1
            if idx < g.n:
                visited.append(idx)
            node = net.arcs[idx].head
        # the drain arc used tells which terminal this leg reached
        terminal = visited[-1] if visited else v
        legs.append((visited, terminal))
    (leg_a, term_a), (leg_b, term_b) = legs
    if {term_a, term_b} != {s, t}:
        raise RuntimeError("route decomposition did not reach both terminals")
    if term_a == t:
        leg_a, leg_b = leg_b, leg_a
    return list(reversed(leg_a)) + [v] + leg_b


@lru_cache(maxsize=None)
def _route_through(g: Graph, s: int, t: int, v: int) -> tuple[int, ...] | None:
    net = build_flow_network(g, s, t, v)
    flow = min_cost_flow(net, 2)
    if flow is None:
        return None
    path = _stitch_routes(g, s, t, v, net, flow)
    if len(path) != flow.cost + 1:
        raise RuntimeError("route length does not match flow cost")
    return tuple(path)


def shortest_route_through(g: Graph, s: int, t: int, v: int) -> PathCertificate | None:
    """A minimum-vertex-count st-path visiting v, or None if none exists.

    Results are cached per (graph, s, t, v); the answer for every size
    bound k follows by comparing against the returned path's length.
    """
    for x in (s, t, v):
        if not (0 <= x < g.n):
            raise VertexRangeError(f"vertex {x} outside 0..{g.n - 1}")
    if s == t:
        raise ValueError("terminals must be distinct")
    path = _route_through(g, s, t, v)
    return None if path is None else PathCertificate(path)


def short_path_through_vertex(g: Graph, s: int, t: int, v: int, k: int) -> bool:
    """Is there an st-path through v with at most k vertices?"""
    path = shortest_route_through(g, s, t, v)
    return path is not None and len(path) <= k


def dump_arcs(net: FlowNetwork) -> str:
    """Plain text arc list, one 'tail head capacity cost' line per arc."""
    return "\n".join(f"{a.tail} {a.head} {a.capacity} {a.cost}" for a in net.arcs) + "\n"
