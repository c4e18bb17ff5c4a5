"""Routing network construction, min-cost flow, and path stitching."""

from __future__ import annotations

import pytest

from secpath import (
    Arc,
    FlowNetwork,
    ProblemInstance,
    Variant,
    build_flow_network,
    build_graph,
    dump_arcs,
    enumerate_paths,
    min_cost_flow,
    short_path_through_vertex,
    shortest_route_through,
    split_nodes,
    verify_certificate,
)

from corpus import atlas_graphs, complete_graph, cycle_graph, path_graph


def test_network_shape_on_three_path():
    g = path_graph(3)
    net = build_flow_network(g, 0, 2, 1)
    assert net.node_count == 8
    assert len(net.arcs) == 10
    assert net.source == 6 and net.sink == 7
    assert split_nodes(1) == (2, 3)
    # one unit-cost arc per vertex, everything else free
    assert sum(1 for a in net.arcs if a.cost == 1) == 3
    assert all(a.cost in (0, 1) for a in net.arcs)
    assert net.arcs[0] == Arc(0, 1, 1, 1)
    assert net.arcs[-1] == Arc(6, 3, 2, 0)


def test_network_shape_on_single_edge():
    net = build_flow_network(build_graph(2, [(0, 1)]), 0, 1, 0)
    assert net.node_count == 6
    assert len(net.arcs) == 7


def test_network_arc_count_formula():
    for g in atlas_graphs(5, connected_only=True):
        net = build_flow_network(g, 0, 1, g.n - 1)
        assert len(net.arcs) == g.n + 2 * g.m + 3
        assert sum(1 for a in net.arcs if a.cost == 1) == g.n


def test_network_validation():
    g = path_graph(3)
    with pytest.raises(ValueError):
        build_flow_network(g, 0, 0, 1)
    with pytest.raises(ValueError):
        build_flow_network(g, 0, 5, 1)


def test_min_cost_flow_on_three_path():
    net = build_flow_network(path_graph(3), 0, 2, 1)
    flow = min_cost_flow(net, 2)
    assert flow.value == 2
    assert flow.cost == 2
    for arc, f in zip(net.arcs, flow.arc_flows):
        assert 0 <= f <= arc.capacity


def test_min_cost_flow_infeasible_returns_none():
    # two disjoint edges: no routes between the components
    g = build_graph(4, [(0, 1), (2, 3)])
    net = build_flow_network(g, 0, 2, 1)
    assert min_cost_flow(net, 2) is None


def test_min_cost_flow_zero_target():
    net = build_flow_network(path_graph(3), 0, 2, 1)
    flow = min_cost_flow(net, 0)
    assert flow.value == 0 and flow.cost == 0
    assert set(flow.arc_flows) == {0}


def test_route_through_middle_of_path():
    assert shortest_route_through(path_graph(3), 0, 2, 1).vertices == (0, 1, 2)


def test_route_through_terminal():
    got = shortest_route_through(cycle_graph(4), 0, 2, 0)
    assert got.vertices in ((0, 1, 2), (0, 3, 2))


def test_route_through_detour_vertex():
    # forcing the far side of the cycle costs one extra vertex
    got = shortest_route_through(cycle_graph(5), 0, 2, 4)
    assert got.vertices == (2, 3, 4, 0)[::-1] or got.vertices == (0, 4, 3, 2)
    assert short_path_through_vertex(cycle_graph(5), 0, 2, 4, 4)
    assert not short_path_through_vertex(cycle_graph(5), 0, 2, 4, 3)


def test_route_none_when_vertex_unreachable_between_terminals():
    # the only 0-1 path is the direct edge; 2 hangs off the far end
    assert shortest_route_through(path_graph(3), 0, 1, 2) is None


def _brute_min_through(g, s, t, v):
    best = None
    for cert in enumerate_paths(g, endpoints=(s, t)):
        if v in cert.vertices:
            if best is None or len(cert.vertices) < best:
                best = len(cert.vertices)
    return best


def test_flow_routes_match_enumeration_on_small_graphs():
    for g in atlas_graphs(5):
        for s in range(g.n):
            for t in range(s + 1, g.n):
                for v in range(g.n):
                    got = shortest_route_through(g, s, t, v)
                    want = _brute_min_through(g, s, t, v)
                    if want is None:
                        assert got is None
                        continue
                    assert got is not None
                    assert len(got.vertices) == want
                    # the stitched route is itself a valid path through v
                    assert v in got.vertices
                    probe = ProblemInstance(g, Variant.SUP, g.n, 0, s, t)
                    assert verify_certificate(probe, got).accepted


def test_route_is_deterministic():
    g = complete_graph(5)
    first = shortest_route_through(g, 0, 4, 2)
    again = shortest_route_through(g, 0, 4, 2)
    assert first == again


def test_dump_arcs_format():
    net = build_flow_network(build_graph(2, [(0, 1)]), 0, 1, 1)
    lines = dump_arcs(net).splitlines()
    assert len(lines) == 7
    assert lines[0] == "0 1 1 1"
    assert all(len(line.split()) == 4 for line in lines)
