from __future__ import annotations

import numpy as np
import pytest

from aca.cover import CommunityCover
from aca.detectors import (
    BPOverlapDetector,
    CliquePercolationDetector,
    HLCDetector,
    LeidenDetector,
    LouvainDetector,
    UMSTDetector,
    make_detector,
    maximal_cliques,
    umst_edges,
)
from aca.graph import Graph, connected_components
from aca.metrics import modularity
from conftest import make_er
from oracles import (
    best_partition_by_modularity,
    k_clique_percolation,
    kclique_chain_connected,
    union_max_spanning_trees,
)


def comm_sets(cover: CommunityCover) -> set[frozenset[int]]:
    return set(cover.communities)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


# -- Louvain / Leiden --------------------------------------------------------

def test_louvain_two_triangles_matches_exhaustive(two_triangles_bridge):
    q_star, argmax = best_partition_by_modularity(6, two_triangles_bridge.edges())
    assert len(argmax) == 1
    expected = {frozenset(b) for b in argmax[0]}
    for seed in range(5):
        cover = LouvainDetector(seed=seed).detect(two_triangles_bridge)
        assert comm_sets(cover) == expected
        assert modularity(two_triangles_bridge, cover) == pytest.approx(q_star)


def test_louvain_complete_graph_single_community():
    g = complete_graph(6)
    cover = LouvainDetector(seed=1).detect(g)
    assert comm_sets(cover) == {frozenset(range(6))}


def test_louvain_ring_of_cliques(ring_of_cliques):
    # frozen from the exhaustive 12-node oracle: unique optimum Q*=0.5
    expected = {frozenset({0, 1, 2}), frozenset({3, 4, 5}),
                frozenset({6, 7, 8}), frozenset({9, 10, 11})}
    for seed in range(3):
        cover = LouvainDetector(seed=seed).detect(ring_of_cliques)
        assert comm_sets(cover) == expected
        assert modularity(ring_of_cliques, cover) == pytest.approx(0.5)


@pytest.mark.slow
def test_ring_of_cliques_frozen_value_rederived(ring_of_cliques):
    q_star, argmax = best_partition_by_modularity(12, ring_of_cliques.edges())
    assert q_star == pytest.approx(0.5)
    assert len(argmax) == 1
    assert {frozenset(b) for b in argmax[0]} == {
        frozenset({0, 1, 2}), frozenset({3, 4, 5}),
        frozenset({6, 7, 8}), frozenset({9, 10, 11})}


def test_leiden_two_triangles(two_triangles_bridge):
    q_star, argmax = best_partition_by_modularity(6, two_triangles_bridge.edges())
    cover = LeidenDetector(seed=0).detect(two_triangles_bridge)
    assert comm_sets(cover) == {frozenset(b) for b in argmax[0]}


def _induces_connected(g: Graph, community: frozenset[int]) -> bool:
    members = set(community)
    start = min(members)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            if y in members and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen == members


def test_leiden_communities_connected():
    rng = np.random.default_rng(2)
    for trial in range(8):
        g = make_er(rng, 25, 0.12)
        if g.num_edges < 1:
            continue
        cover = LeidenDetector(seed=trial).detect(g)
        for c in cover.communities:
            assert _induces_connected(g, c)


def test_leiden_never_merges_components():
    g = Graph(8, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (6, 7)])
    cover = LeidenDetector(seed=3).detect(g)
    comps = [set(c) for c in connected_components(g)]
    for c in cover.communities:
        assert any(set(c) <= comp for comp in comps)


def test_phase_modularity_monotone():
    rng = np.random.default_rng(4)
    for trial in range(6):
        g = make_er(rng, 30, 0.12)
        if g.num_edges < 2:
            continue
        for det in (LouvainDetector(seed=trial), LeidenDetector(seed=trial)):
            det.fit(g)
            trace = det.phase_modularity_
            assert all(b >= a - 1e-9 for a, b in zip(trace, trace[1:]))
            singletons = CommunityCover([[v] for v in range(g.n)], n=g.n)
            assert trace[-1] >= modularity(g, singletons) - 1e-12


def test_detectors_reproducible():
    rng = np.random.default_rng(5)
    g = make_er(rng, 30, 0.15)
    for name in ("louvain", "leiden", "cp", "hlc", "umst", "bp"):
        if name == "umst":
            comp = max(connected_components(g), key=len)
            remap = {v: i for i, v in enumerate(comp)}
            gg = Graph(len(comp), [(remap[u], remap[v]) for u, v in g.edges()
                                   if u in remap and v in remap])
        else:
            gg = g
        a = make_detector(name, seed=7).detect(gg)
        b = make_detector(name, seed=7).detect(gg)
        assert a == b


# -- Clique percolation ------------------------------------------------------

def test_cp_shared_edge_one_community():
    g = Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    cover = CliquePercolationDetector(k=3).detect(g)
    assert frozenset({0, 1, 2, 3}) in comm_sets(cover)


def test_cp_shared_node_two_overlapping():
    g = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    cover = CliquePercolationDetector(k=3).detect(g)
    assert frozenset({0, 1, 2}) in comm_sets(cover)
    assert frozenset({2, 3, 4}) in comm_sets(cover)


def test_cp_tree_all_singletons():
    g = Graph(5, [(0, 1), (0, 2), (1, 3), (1, 4)])
    cover = CliquePercolationDetector(k=3).detect(g)
    assert comm_sets(cover) == {frozenset({v}) for v in range(5)}


def test_cp_rejects_small_k():
    with pytest.raises(ValueError):
        CliquePercolationDetector(k=2).detect(complete_graph(4))


def test_cp_matches_bruteforce_percolation():
    rng = np.random.default_rng(6)
    for trial in range(10):
        g = make_er(rng, 11, 0.3)
        cover = CliquePercolationDetector(k=3).detect(g)
        expected = k_clique_percolation(g.n, g.edges(), 3)
        got = [set(c) for c in cover.communities if len(c) > 1]
        assert sorted(map(sorted, got)) == sorted(map(sorted, expected))
        for c in got:
            assert kclique_chain_connected(c, g.edges(), 3)


def test_maximal_cliques_cover_edges():
    rng = np.random.default_rng(7)
    g = make_er(rng, 12, 0.35)
    cliques = maximal_cliques(g)
    for u, v in g.edges():
        assert any(u in c and v in c for c in cliques)
    edge_set = set(g.edges())
    for c in cliques:
        for i, u in enumerate(c):
            for v in c[i + 1:]:
                assert (u, v) in edge_set


# -- HLC ---------------------------------------------------------------------

def test_hlc_two_triangles(two_triangles_bridge):
    cover = HLCDetector().detect(two_triangles_bridge)
    assert frozenset({0, 1, 2}) in comm_sets(cover)
    assert frozenset({3, 4, 5}) in comm_sets(cover)
    assert frozenset({2, 3}) in comm_sets(cover)


def test_hlc_complete_graph_single():
    cover = HLCDetector().detect(complete_graph(4))
    assert comm_sets(cover) == {frozenset(range(4))}


def test_hlc_edge_clusters_partition_edges():
    rng = np.random.default_rng(8)
    for trial in range(6):
        g = make_er(rng, 20, 0.2)
        if g.num_edges < 2:
            continue
        det = HLCDetector()
        clusters = det.edge_clusters(g)
        flat = [e for cl in clusters for e in cl]
        assert sorted(flat) == g.edges()
        assert len(flat) == len(set(flat))


def test_hlc_threshold_mode():
    g = complete_graph(4)
    cover = HLCDetector(threshold=1.1).detect(g)  # nothing merges
    assert all(len(c) == 2 for c in cover.communities)


# -- UMST --------------------------------------------------------------------

def test_umst_tree_is_tree():
    g = Graph(5, [(0, 1), (0, 2), (1, 3), (1, 4)])
    assert umst_edges(g) == set(g.edges())


def test_umst_cycle_keeps_all_edges():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert umst_edges(g) == set(g.edges())


def test_umst_matches_forced_kruskal_oracle():
    from aca.graph import jaccard_neighborhood

    rng = np.random.default_rng(9)
    done = 0
    while done < 8:
        g = make_er(rng, 10, 0.35)
        if len(connected_components(g)) != 1:
            continue
        weighted = [(u, v, jaccard_neighborhood(g, u, v)) for u, v in g.edges()]
        expected = union_max_spanning_trees(g.n, weighted)
        assert umst_edges(g) == expected
        done += 1


def test_umst_two_cliques(two_cliques_bridge):
    cover = UMSTDetector().detect(two_cliques_bridge)
    assert comm_sets(cover) == {frozenset(range(5)), frozenset(range(5, 10))}


def test_umst_rejects_disconnected():
    g = Graph(4, [(0, 1), (2, 3)])
    with pytest.raises(ValueError):
        UMSTDetector().detect(g)


# -- BP overlap --------------------------------------------------------------

def test_bp_two_disjoint_cliques():
    edges = []
    for base in (0, 4):
        for i in range(4):
            for j in range(i + 1, 4):
                edges.append((base + i, base + j))
    g = Graph(8, edges)
    cover = BPOverlapDetector(dim=2, seed=0).detect(g)
    assert frozenset(range(4)) in comm_sets(cover)
    assert frozenset(range(4, 8)) in comm_sets(cover)


def test_bp_objective_nondecreasing():
    rng = np.random.default_rng(10)
    g = make_er(rng, 20, 0.2)
    det = BPOverlapDetector(dim=3, seed=1)
    det.fit(g)
    trace = det.objective_trace_
    assert all(b >= a - 1e-9 for a, b in zip(trace, trace[1:]))
    assert len(trace) >= 2


def test_bp_single_edge_pair_saturates():
    g = Graph(2, [(0, 1)])
    det = BPOverlapDetector(dim=1, seed=2)
    f = det.fit_memberships(g)
    strength = float(f[0] @ f[1])
    assert 1.0 - np.exp(-strength) > 0.99
    cover = det.detect(g)
    assert frozenset({0, 1}) in comm_sets(cover)


def test_bp_dim_validation():
    with pytest.raises(ValueError):
        BPOverlapDetector(dim=0).detect(complete_graph(4))


def test_make_detector_unknown():
    with pytest.raises(ValueError, match="valid"):
        make_detector("nope")
