"""Flip graph construction, traversal, diameter, and export formats."""

from array import array

import pytest

from matchflip.counts import catalan
from matchflip.dyck import to_dyck, unrank
from matchflip.errors import ResourceLimitError
from matchflip.flips import is_centered, neighbors
from matchflip.graphs import (FlipGraph, bfs_distance, bfs_distances,
                              bfs_layers, build_flip_graph, component_report,
                              csv_lines, diameter, dot_lines, eccentricity,
                              graph_json_obj)

from conftest import cached_graph


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("mode", ["all", "centered"])
def test_adjacency_matches_per_matching_neighbors(n, mode):
    g = cached_graph(n, mode)
    assert g.vertex_count == catalan(n)
    for r in range(g.vertex_count):
        m = g.matching(r)
        expected = sorted(g.rank_of(nb) for nb in neighbors(m, mode=mode))
        assert list(g.neighbors(r)) == expected
        assert g.degree(r) == len(expected)


@pytest.mark.parametrize("n", range(2, 7))
def test_symmetric_adjacency_with_matching_flags(n):
    g = cached_graph(n, "all")
    adj = {r: dict(zip(g.neighbors(r), g.neighbor_flags(r)))
           for r in range(g.vertex_count)}
    for r, row in adj.items():
        assert list(row) == sorted(row)
        for s, flag in row.items():
            assert adj[s][r] == flag
            assert r != s


@pytest.mark.parametrize("n", range(2, 7))
def test_centered_mode_is_the_flagged_subgraph(n):
    g = cached_graph(n, "all")
    h = cached_graph(n, "centered")
    kept = {(min(r, s), max(r, s)) for r, s, cen in g.edges() if cen}
    assert {(r, s) for r, s, cen in h.edges()} == kept
    assert all(cen for _, _, cen in h.edges())
    assert g.centered_edge_count == len(kept) == h.edge_count
    # flags agree with the flip predicate itself
    for r, s, cen in g.edges():
        m = g.matching(r)
        moved = sorted(set(m.pairs) ^ set(g.matching(s).pairs))
        e, f = [c for c in moved if c in m]
        assert cen == is_centered(n, e, f)


def test_vertex_labels_round_trip():
    g = cached_graph(4, "all")
    for r in range(g.vertex_count):
        assert g.word(r) == to_dyck(g.matching(r))
        assert g.rank_of(g.matching(r)) == r
    assert g.matching(5) == unrank(4, 5)


def test_build_rejects_bad_arguments():
    with pytest.raises(ValueError):
        build_flip_graph(3, mode="weird")
    with pytest.raises(ValueError):
        build_flip_graph(0)
    with pytest.raises(ValueError):
        build_flip_graph(3, threads=0)


def test_memory_budget_is_enforced_before_allocation():
    with pytest.raises(ResourceLimitError):
        build_flip_graph(8, mem_budget=1024)
    g = build_flip_graph(4, mem_budget=10 ** 8)
    assert g.vertex_count == 14


@pytest.mark.parametrize("threads", [2, 3])
def test_threaded_build_is_byte_identical(threads):
    a = build_flip_graph(5, threads=1)
    b = build_flip_graph(5, threads=threads)
    assert a.offsets == b.offsets
    assert a.targets == b.targets
    assert a.flags == b.flags


def test_degree_summary_is_consistent():
    g = cached_graph(5, "centered")
    summary = g.degree_summary()
    degs = g.degrees()
    assert summary["min"] == min(degs)
    assert summary["max"] == max(degs)
    assert summary["min_count"] == degs.count(summary["min"])
    assert summary["max_count"] == degs.count(summary["max"])
    assert sum(summary["histogram"].values()) == g.vertex_count
    assert summary["histogram"][summary["max"]] == summary["max_count"]
    assert g.vertices_with_degree(summary["max"]) == [
        r for r, d in enumerate(degs) if d == summary["max"]]


def test_components_ordering_and_sizes():
    h4 = cached_graph(4, "centered")
    comps = h4.components()
    assert [len(c) for c in comps] == [8, 3, 3]
    assert comps[1][0] < comps[2][0]
    for comp in comps:
        assert comp == sorted(comp)
    assert not h4.is_connected()
    assert cached_graph(4, "all").is_connected()


def test_component_edge_count_tree_check():
    h6 = cached_graph(6, "centered")
    comps = h6.components()
    sizes = sorted((len(c) for c in comps), reverse=True)
    assert len(comps) == 8 and sum(sizes) == catalan(6)
    trees = [c for c in comps if h6.component_edge_count(c) == len(c) - 1]
    assert len(trees) == 5
    assert all(len(c) == 4 for c in trees)


def test_component_report_structure():
    h6 = cached_graph(6, "centered")
    report = component_report(h6)
    assert len(report) == 8
    assert sum(entry["size"] for entry in report) == catalan(6)
    assert sum(entry["is_tree"] for entry in report) == 5
    assert sum(entry["symmetric_count"] for entry in report) == 20
    comps = h6.components()
    for entry, comp in zip(report, comps):
        assert entry["min_rank"] == comp[0]
        assert entry["edges"] == h6.component_edge_count(comp)
        ws = sorted(int(k) for k in entry["weights"])
        assert sum(entry["weights"].values()) == entry["size"]
        assert len(ws) <= 2
        if len(ws) == 2:
            assert ws[1] - ws[0] == 4  # the two weights of one merged class


def test_bfs_helpers_agree():
    g = cached_graph(5, "all")
    src = 7
    dist = bfs_distances(g, src)
    layers = bfs_layers(g, src)
    assert layers[0] == [src]
    for d, layer in enumerate(layers):
        assert layer == sorted(layer)
        for v in layer:
            assert dist[v] == d
    assert sum(len(layer) for layer in layers) == g.vertex_count
    for dst in (0, 13, 41):
        assert bfs_distance(g, src, dst) == dist[dst]
    ecc, reached = eccentricity(g, src)
    assert ecc == max(dist)
    assert reached == g.vertex_count


def test_bfs_distance_unreachable_is_none():
    h4 = cached_graph(4, "centered")
    comps = h4.components()
    a, b = comps[0][0], comps[1][0]
    assert bfs_distance(h4, a, b) is None
    assert bfs_distances(h4, a)[b] == -1


def test_diameter_exact_small():
    assert diameter(cached_graph(4, "all")).value == 3
    assert diameter(cached_graph(5, "all")).value == 4
    res = diameter(cached_graph(5, "centered"))
    assert res.connected and res.exact and res.value == 8
    a, b = res.witness
    assert bfs_distance(cached_graph(5, "centered"), a, b) == 8


def test_diameter_disconnected():
    res = diameter(cached_graph(4, "centered"))
    assert not res.connected
    assert res.value is None and res.lower is None and res.upper is None


def test_diameter_bounds_mode_is_deterministic():
    g = cached_graph(5, "all")
    res = diameter(g, exact_limit=10, samples=4, seed=1)
    assert res.connected and not res.exact
    assert res.value is None
    assert res.lower <= 4 <= res.upper
    again = diameter(g, exact_limit=10, samples=4, seed=1)
    assert (res.lower, res.upper, res.witness) == (
        again.lower, again.upper, again.witness)


@pytest.mark.parametrize("n", range(2, 7))
def test_flip_graph_is_bipartite(n):
    assert cached_graph(n, "all").is_bipartite()
    assert cached_graph(n, "centered").is_bipartite()


def test_bipartite_rejects_odd_cycle():
    triangle = FlipGraph(1, "all", array("q", [0, 2, 4, 6]),
                         array("i", [1, 2, 0, 2, 0, 1]), bytes(6))
    assert not triangle.is_bipartite()


def test_dot_output_shape():
    g = cached_graph(3, "all")
    lines = list(dot_lines(g))
    assert lines[0].startswith("graph ") and lines[-1] == "}"
    labels = [ln for ln in lines if "label=" in ln]
    assert len(labels) == g.vertex_count
    assert f'[label="{g.word(0)}"]' in labels[0]
    solid = sum("style=solid" in ln for ln in lines)
    dashed = sum("style=dashed" in ln for ln in lines)
    assert solid == g.centered_edge_count
    assert solid + dashed == g.edge_count


def test_csv_round_trips_edges():
    g = cached_graph(4, "all")
    lines = list(csv_lines(g))
    assert lines[0] == "src_rank,dst_rank,centered"
    parsed = [tuple(int(x) for x in ln.split(",")) for ln in lines[1:]]
    assert parsed == [(r, s, int(c)) for r, s, c in g.edges()]
    assert len(parsed) == g.edge_count


def test_json_obj_fields():
    g = cached_graph(3, "centered")
    obj = graph_json_obj(g, include_words=True)
    assert obj["n"] == 3 and obj["mode"] == "centered"
    assert obj["vertex_count"] == 5
    assert len(obj["edges"]) == obj["edge_count"] == g.edge_count
    assert obj["words"] == [g.word(r) for r in range(5)]
    assert "words" not in graph_json_obj(g)
