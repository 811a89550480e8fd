from __future__ import annotations

import io

import numpy as np
import pytest

from aca.graph import (
    EdgeOverlay,
    Graph,
    GraphParseError,
    jaccard_neighborhood,
    largest_connected_component,
    load_edge_list,
    load_gml,
)
from conftest import make_er
from oracles import bfs_components


def test_load_simple():
    g = load_edge_list(io.StringIO("0 1\n1 2\n"))
    assert g.n == 3
    assert g.num_edges == 2


def test_load_dedup_and_comments():
    g = load_edge_list(io.StringIO("a b\nb a\n# c\n"))
    assert g.n == 2
    assert g.num_edges == 1
    assert g.load_report.directed_pairs_merged == 1


def test_load_self_loop_dropped():
    g = load_edge_list(io.StringIO("a a\na b\n"))
    assert g.num_edges == 1
    assert g.load_report.self_loops_dropped == 1


def test_load_errors():
    with pytest.raises(GraphParseError, match="line 2"):
        load_edge_list(io.StringIO("0 1\n0 1 2\n"))
    with pytest.raises(GraphParseError, match="empty"):
        load_edge_list(io.StringIO("# nothing\n"))


def test_load_keeps_first_appearance_order():
    g = load_edge_list(io.StringIO("x y\nz x\n"))
    assert g.node_labels == ["x", "y", "z"]


def test_gml_roundtrip():
    text = """
    graph [
      node [ id 10 label "a" value 1 ]
      node [ id 20 label "b" value 2 ]
      node [ id 30 label "c" value 1 ]
      edge [ source 10 target 20 ]
      edge [ source 20 target 30 ]
      edge [ source 20 target 30 ]
    ]
    """
    g = load_gml(text)
    assert g.n == 3
    assert g.num_edges == 2
    assert g.node_labels == [1, 2, 1]
    assert g.load_report.duplicates_dropped == 1


def test_handshake_identity():
    rng = np.random.default_rng(7)
    for _ in range(20):
        g = make_er(rng, 12, 0.3)
        assert sum(g.degree(v) for v in range(g.n)) == 2 * g.num_edges


def test_lcc_tie_break():
    g = Graph(6, [(0, 1), (0, 2), (3, 4), (3, 5)])
    lcc = largest_connected_component(g)
    assert lcc.n == 3
    assert lcc.node_labels is None
    assert sorted(lcc.edges()) == [(0, 1), (0, 2)]


def test_lcc_identity_and_idempotent():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    lcc = largest_connected_component(g)
    assert lcc.n == 4 and lcc.edges() == g.edges()
    again = largest_connected_component(lcc)
    assert again.edges() == lcc.edges()


def test_lcc_matches_bfs_oracle():
    rng = np.random.default_rng(42)
    for _ in range(10):
        g = make_er(rng, 50, 0.02)
        comps = bfs_components(g.n, g.edges())
        best = max(comps, key=lambda m: (len(m), -m[0]))
        lcc = largest_connected_component(g)
        assert lcc.n == len(best)
        mapped = {old: new for new, old in enumerate(best)}
        expect = sorted(
            tuple(sorted((mapped[u], mapped[v])))
            for u, v in g.edges() if u in mapped and v in mapped
        )
        assert lcc.edges() == expect


def test_jaccard_examples():
    tri = Graph(3, [(0, 1), (0, 2), (1, 2)])
    assert jaccard_neighborhood(tri, 0, 1) == 1.0
    path = Graph(3, [(0, 1), (1, 2)])
    assert jaccard_neighborhood(path, 0, 2) == pytest.approx(1 / 3)
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert jaccard_neighborhood(star, 0, 1) == 0.5


def test_jaccard_properties():
    rng = np.random.default_rng(3)
    g = make_er(rng, 10, 0.4)
    for _ in range(20):
        i, j = rng.integers(0, g.n, size=2)
        assert jaccard_neighborhood(g, i, j) == jaccard_neighborhood(g, j, i)
        assert jaccard_neighborhood(g, i, i) == 1.0


def test_overlay_semantics():
    g = Graph(4, [(0, 1), (1, 2)])
    ov = EdgeOverlay(g, [(0, 3)])
    assert ov.neighbors(0) == (1, 3)
    assert ov.degree(0) == 2
    assert ov.has_edge(0, 3) and not g.has_edge(0, 3)
    assert ov.num_edges == 3
    # base unchanged after the overlay goes away
    assert g.neighbors(0) == (1,)
    assert g.degrees().sum() == 2 * g.num_edges


def test_overlay_rejects_existing_and_duplicates():
    g = Graph(3, [(0, 1)])
    with pytest.raises(ValueError):
        EdgeOverlay(g, [(1, 0)])
    with pytest.raises(ValueError):
        EdgeOverlay(g, [(0, 2), (2, 0)])


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 5)])
