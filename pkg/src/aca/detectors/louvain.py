"""Greedy modularity partitioning: Louvain, and Leiden's connected variant.

Both iterate a local-move phase (seed-shuffled node visits, each node
joining the neighboring community with the best modularity gain) and an
aggregation phase on the community multigraph. Leiden inserts a refinement
between them that splits every community into its connected components, so
its output communities always induce connected subgraphs.
"""

from __future__ import annotations

import numpy as np

from ..graph import GraphLike
from ..metrics import modularity
from ..rng import substream
from .base import CommunityDetector


class _WeightedGraph:
    """Aggregation-level multigraph: symmetric weights plus self-loops."""

    __slots__ = ("n", "adj", "self_loops", "strength", "two_m")

    def __init__(self, n: int, adj: list[dict[int, float]], self_loops: np.ndarray):
        self.n = n
        self.adj = adj
        self.self_loops = self_loops
        self.strength = np.array(
            [sum(adj[v].values()) + 2.0 * self_loops[v] for v in range(n)])
        self.two_m = float(self.strength.sum())

    @classmethod
    def from_graph(cls, g: GraphLike) -> "_WeightedGraph":
        adj: list[dict[int, float]] = [dict.fromkeys(g.neighbors(v), 1.0)
                                       for v in range(g.n)]
        return cls(g.n, adj, np.zeros(g.n))


def _local_move(wg: _WeightedGraph, assign: np.ndarray,
                rng: np.random.Generator) -> bool:
    """Iterated best-gain moves until a full pass changes nothing.

    A node may also leave into a fresh singleton community (gain 0 baseline),
    which matters when the phase starts from a non-singleton assignment.
    """
    comm_tot = np.zeros(wg.n)
    np.add.at(comm_tot, assign, wg.strength)
    comm_size = np.bincount(assign, minlength=wg.n)
    free = [c for c in range(wg.n - 1, -1, -1) if comm_size[c] == 0]
    improved = False
    while True:
        moves = 0
        for v in rng.permutation(wg.n):
            c_old = int(assign[v])
            weight_to: dict[int, float] = {}
            for u, w in wg.adj[v].items():
                c = int(assign[u])
                weight_to[c] = weight_to.get(c, 0.0) + w
            k_v = wg.strength[v]
            comm_tot[c_old] -= k_v
            comm_size[c_old] -= 1
            best_c = c_old
            best_gain = weight_to.get(c_old, 0.0) - k_v * comm_tot[c_old] / wg.two_m
            for c in sorted(weight_to):
                if c == c_old:
                    continue
                gain = weight_to[c] - k_v * comm_tot[c] / wg.two_m
                if gain > best_gain + 1e-12:
                    best_c, best_gain = c, gain
            if 0.0 > best_gain + 1e-12:
                # strictly better off alone (only possible if not already)
                best_c = c_old if comm_size[c_old] == 0 else free.pop()
            if comm_size[c_old] == 0 and best_c != c_old:
                free.append(c_old)
            comm_tot[best_c] += k_v
            comm_size[best_c] += 1
            if best_c != c_old:
                assign[v] = best_c
                moves += 1
        if moves == 0:
            return improved
        improved = True


def _renumber(assign: np.ndarray) -> np.ndarray:
    _, dense = np.unique(assign, return_inverse=True)
    return dense.astype(np.int64)


def _aggregate(wg: _WeightedGraph, assign: np.ndarray) -> _WeightedGraph:
    k = int(assign.max()) + 1
    adj: list[dict[int, float]] = [{} for _ in range(k)]
    self_loops = np.zeros(k)
    for v in range(wg.n):
        cv = int(assign[v])
        self_loops[cv] += wg.self_loops[v]
        for u, w in wg.adj[v].items():
            if u < v:
                continue
            cu = int(assign[u])
            if cu == cv:
                self_loops[cv] += w
            else:
                adj[cv][cu] = adj[cv].get(cu, 0.0) + w
                adj[cu][cv] = adj[cu].get(cv, 0.0) + w
    return _WeightedGraph(k, adj, self_loops)


def _split_disconnected(wg: _WeightedGraph, assign: np.ndarray) -> tuple[np.ndarray, bool]:
    """Refinement: break every community into its connected components."""
    refined = np.full(wg.n, -1, dtype=np.int64)
    next_id = 0
    split_any = False
    for c in np.unique(assign):
        members = np.flatnonzero(assign == c)
        member_set = set(members.tolist())
        remaining = set(members.tolist())
        parts = 0
        while remaining:
            seed_node = min(remaining)
            stack = [seed_node]
            remaining.discard(seed_node)
            refined[seed_node] = next_id
            while stack:
                x = stack.pop()
                for y in wg.adj[x]:
                    if y in remaining and y in member_set:
                        remaining.discard(y)
                        refined[y] = next_id
                        stack.append(y)
            next_id += 1
            parts += 1
        if parts > 1:
            split_any = True
    return refined, split_any


def _communities_from(assign: np.ndarray) -> list[list[int]]:
    groups: dict[int, list[int]] = {}
    for v, c in enumerate(assign):
        groups.setdefault(int(c), []).append(v)
    return [sorted(m) for m in groups.values()]


class LouvainDetector(CommunityDetector):
    """Modularity maximization by local moves and aggregation."""

    def __init__(self, seed: int = 0):
        self.seed = seed

    def detect(self, graph: GraphLike):
        if graph.num_edges < 1:
            raise ValueError("louvain needs at least one edge")
        rng = substream(self.seed, "louvain")
        wg = _WeightedGraph.from_graph(graph)
        assign = np.arange(wg.n)
        node_to_super = np.arange(graph.n)
        trace: list[float] = []
        while True:
            improved = _local_move(wg, assign, rng)
            assign = _renumber(assign)
            flat = assign[node_to_super]
            trace.append(modularity(graph, self._cover(_communities_from(flat), graph)))
            if not improved:
                break
            wg = _aggregate(wg, assign)
            node_to_super = flat
            assign = np.arange(wg.n)
        self.phase_modularity_ = trace
        return self._cover(_communities_from(flat), graph)


class LeidenDetector(CommunityDetector):
    """Louvain with a refinement phase keeping communities connected."""

    def __init__(self, seed: int = 0):
        self.seed = seed

    def detect(self, graph: GraphLike):
        if graph.num_edges < 1:
            raise ValueError("leiden needs at least one edge")
        rng = substream(self.seed, "leiden")
        wg = _WeightedGraph.from_graph(graph)
        assign = np.arange(wg.n)
        node_to_super = np.arange(graph.n)
        trace: list[float] = []
        prev_flat: np.ndarray | None = None
        for _ in range(2 * graph.n + 10):
            improved = _local_move(wg, assign, rng)
            refined, split_any = _split_disconnected(wg, assign)
            flat = refined[node_to_super]
            trace.append(modularity(graph, self._cover(_communities_from(flat), graph)))
            stalled = prev_flat is not None and np.array_equal(flat, prev_flat)
            if (not improved and not split_any) or (not improved and stalled):
                break
            prev_flat = flat
            # aggregate over refined blocks; each block restarts in its
            # pre-refinement community (zero-strength blocks stand alone)
            k = int(refined.max()) + 1
            block_comm = np.zeros(k, dtype=np.int64)
            block_strength = np.zeros(k)
            for v in range(wg.n):
                block_comm[refined[v]] = assign[v]
                block_strength[refined[v]] += wg.strength[v]
            next_free = int(assign.max()) + 1
            for b in range(k):
                if block_strength[b] == 0.0:
                    block_comm[b] = next_free
                    next_free += 1
            wg = _aggregate(wg, refined)
            node_to_super = flat
            assign = _renumber(block_comm)
        self.phase_modularity_ = trace
        return self._cover(_communities_from(flat), graph)
