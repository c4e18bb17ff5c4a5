"""Enumeration order, counts, and brute-force decisions."""

from __future__ import annotations

import pytest

import networkx as nx

from secpath import (
    InvalidInstanceError,
    ProblemInstance,
    Variant,
    build_graph,
    enumerate_paths,
    neighborhood,
    oracle_decide,
    verify_certificate,
)
from secpath.oracle import iter_path_stats

from corpus import (
    atlas_graphs,
    complete_graph,
    cycle_graph,
    from_networkx,
    path_graph,
    star_graph,
)


def test_three_path_enumeration_is_lexicographic():
    seqs = [p.vertices for p in enumerate_paths(path_graph(3))]
    assert seqs == [(0,), (0, 1), (0, 1, 2), (1,), (1, 2), (2,)]


@pytest.mark.parametrize("n", range(1, 9))
def test_path_graph_count_closed_form(n):
    # a path with i+1 vertices starts at any of n-i positions
    assert sum(1 for _ in enumerate_paths(path_graph(n))) == n * (n + 1) // 2


def test_every_path_is_canonically_oriented_and_unique():
    for g in atlas_graphs(5):
        seen = set()
        prev = None
        for cert in enumerate_paths(g):
            seq = cert.vertices
            assert seq[0] <= seq[-1]
            assert seq not in seen
            seen.add(seq)
            assert tuple(reversed(seq)) not in seen or len(seq) == 1
            if prev is not None:
                assert prev < seq
            prev = seq


def _networkx_path_set(g, max_len=None, endpoints=None):
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    found = set()
    if endpoints is None:
        for v in range(g.n):
            found.add((v,))
        pairs = [(s, t) for s in range(g.n) for t in range(s + 1, g.n)]
    else:
        pairs = [(min(endpoints), max(endpoints))]
    for s, t in pairs:
        for path in nx.all_simple_paths(nxg, s, t):
            if max_len is not None and len(path) > max_len:
                continue
            seq = tuple(path)
            found.add(seq if seq[0] <= seq[-1] else tuple(reversed(seq)))
    if max_len is not None:
        found = {p for p in found if len(p) <= max_len}
    return found


@pytest.mark.parametrize("max_len", [None, 1, 3])
def test_enumeration_matches_networkx(max_len):
    for g in atlas_graphs(5):
        ours = {p.vertices for p in enumerate_paths(g, max_len=max_len)}
        assert ours == _networkx_path_set(g, max_len=max_len)


def test_endpoint_enumeration_matches_networkx():
    for g in atlas_graphs(5, connected_only=True):
        for s in range(g.n):
            for t in range(s + 1, g.n):
                ours = {p.vertices for p in enumerate_paths(g, endpoints=(s, t))}
                assert ours == _networkx_path_set(g, endpoints=(s, t))


def test_endpoint_enumeration_orientation_and_order():
    c4 = cycle_graph(4)
    seqs = [p.vertices for p in enumerate_paths(c4, endpoints=(2, 0))]
    assert seqs == [(0, 1, 2), (0, 3, 2)]


def test_endpoints_validation():
    g = path_graph(3)
    with pytest.raises(ValueError):
        list(enumerate_paths(g, endpoints=(1, 1)))
    with pytest.raises(ValueError):
        list(enumerate_paths(g, endpoints=(0, 9)))


def test_path_stats_agree_with_certificates():
    for g in atlas_graphs(5):
        stats = list(iter_path_stats(g))
        certs = list(enumerate_paths(g))
        assert len(stats) == len(certs)
        for (size, ncount), cert in zip(stats, certs):
            assert size == len(cert.vertices)
            assert ncount == len(neighborhood(g, cert.vertices))


def test_single_vertex_counts_as_path():
    one = build_graph(1, [])
    assert [p.vertices for p in enumerate_paths(one)] == [(0,)]
    assert oracle_decide(ProblemInstance(one, Variant.LSP, 1, 0)).decision


def test_empty_graph_has_no_paths():
    empty = build_graph(0, [])
    assert list(enumerate_paths(empty)) == []
    assert not oracle_decide(ProblemInstance(empty, Variant.SSP, 1, 0)).decision


def test_star_short_secluded_leaf_witness():
    # a single leaf has one neighbor; the center alone has three
    inst = ProblemInstance(star_graph(3), Variant.SSP, 2, 1)
    ans = oracle_decide(inst)
    assert ans.decision
    assert ans.witness.vertices == (1,)
    assert verify_certificate(inst, ans.witness).accepted


def test_five_cycle_long_unsecluded_is_negative():
    # no path of C5 sees more than two outside vertices
    inst = ProblemInstance(cycle_graph(5), Variant.LUP, 1, 3)
    ans = oracle_decide(inst)
    assert not ans.decision
    assert ans.witness is None


def test_oracle_short_circuits_and_counts():
    inst = ProblemInstance(path_graph(3), Variant.SSP, 1, 0)
    ans = oracle_decide(inst)
    assert not ans.decision
    assert ans.stats.paths_enumerated == 3  # only the single-vertex paths
    first = oracle_decide(ProblemInstance(path_graph(3), Variant.SSP, 1, 1))
    assert first.decision and first.stats.paths_enumerated == 1


def test_oracle_respects_terminals():
    g = cycle_graph(4)
    yes = oracle_decide(ProblemInstance(g, Variant.SSP, 3, 2, 0, 2))
    assert yes.decision and yes.witness.vertices == (0, 1, 2)
    no = oracle_decide(ProblemInstance(g, Variant.SSP, 2, 4, 0, 2))
    assert not no.decision


def test_oracle_long_variants_consider_all_sizes():
    g = complete_graph(4)
    assert oracle_decide(ProblemInstance(g, Variant.LSP, 4, 0)).decision
    assert not oracle_decide(ProblemInstance(g, Variant.LSP, 5, 4)).decision
    assert oracle_decide(ProblemInstance(g, Variant.LUP, 3, 1)).decision


def test_witness_is_first_satisfying_path_in_order():
    g = cycle_graph(4)
    inst = ProblemInstance(g, Variant.SUP, 2, 2)
    ans = oracle_decide(inst)
    assert ans.witness.vertices == (0,)
    multi = oracle_decide(ProblemInstance(g, Variant.SUP, 3, 1, 1, 3))
    assert multi.witness.vertices == (1, 0, 3)


def test_deterministic_across_runs():
    g = from_networkx(nx.petersen_graph())
    a = oracle_decide(ProblemInstance(g, Variant.SSP, 4, 8))
    b = oracle_decide(ProblemInstance(g, Variant.SSP, 4, 8))
    assert a == b
