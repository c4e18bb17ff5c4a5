"""How the waypoint routing works: vertex splitting plus min-cost flow.

Run with: python3 demos/flow_gadget.py
"""

from secpath import (
    build_flow_network,
    build_graph,
    dump_arcs,
    min_cost_flow,
    short_path_through_vertex,
    shortest_route_through,
)

# 5-cycle with a chord: the short way from 0 to 2 skips vertex 4,
# the long way around is forced once 4 must be visited
g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)])
s, t, v = 0, 2, 4

print("Question: is there a simple path from s to t through v with at most")
print("k vertices?  Two internally disjoint legs v->s and v->t answer it.")
print()

net = build_flow_network(g, s, t, v)
print(f"network for (s={s}, t={t}, via {v}): {net.node_count} nodes, {len(net.arcs)} arcs")
print("each vertex w becomes an arc 2w -> 2w+1 of cost 1; edges cross for free;")
print("two units leave v's exit node and drain from the split exits of s and t")
print()
print(dump_arcs(net))

flow = min_cost_flow(net, 2)
print(f"min-cost flow of value {flow.value}: cost {flow.cost}")
print("cost counts split arcs, one per path vertex besides v itself")
print()

route = shortest_route_through(g, s, t, v)
print(f"stitched route: {route.vertices} ({len(route.vertices)} vertices)")
for k in range(2, 6):
    print(f"  reachable with k={k}? {short_path_through_vertex(g, s, t, v, k)}")
