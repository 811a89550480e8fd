"""Independent brute-force oracles used to freeze expected values.

Everything here deliberately avoids the library's own code paths: metrics
are recomputed from adjacency matrices and raw definitions, components via
BFS, clique percolation via direct k-clique enumeration, and spanning-tree
membership via forced-edge Kruskal runs.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations

import numpy as np


def adjacency(n: int, edges) -> np.ndarray:
    a = np.zeros((n, n), dtype=np.int64)
    for u, v in edges:
        a[u, v] = 1
        a[v, u] = 1
    return a


def bfs_components(n: int, edges) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        comp = []
        q = deque([s])
        seen[s] = True
        while q:
            x = q.popleft()
            comp.append(x)
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    q.append(y)
        comps.append(sorted(comp))
    return comps


def modularity_double_sum(n: int, edges, assignment) -> float:
    """Q from the ordered double sum over all node pairs (including u=v)."""
    a = adjacency(n, edges)
    k = a.sum(axis=1)
    two_m = k.sum()
    q = 0.0
    for u in range(n):
        for v in range(n):
            if assignment[u] == assignment[v]:
                q += a[u, v] - k[u] * k[v] / two_m
    return q / two_m


def rank_by_enumeration(v: int, communities, temps) -> int:
    """Rank via integer cross-multiplied temperature comparisons."""
    temps = list(temps)
    stats = [(sum(temps[u] for u in c), len(c)) for c in communities]
    best_s, best_n = None, None
    for (s, sz), c in zip(stats, communities):
        if v in c and (best_s is None or s * best_n > best_s * sz):
            best_s, best_n = s, sz
    assert best_s is not None
    union = set()
    for (s, sz), c in zip(stats, communities):
        if s * best_n >= best_s * sz:
            union.update(c)
    return len(union)


def heterophilicity_matrix(n: int, edges, labels) -> float:
    a = adjacency(n, edges)
    lab = np.asarray(labels)
    cross = 0
    for u in range(n):
        for v in range(u + 1, n):
            if a[u, v] and lab[u] != lab[v]:
                cross += 1
    n0 = int((lab == 0).sum())
    n1 = n - n0
    m = a.sum() // 2
    pairs = n * (n - 1) // 2
    return cross / (n0 * n1 * m / pairs)


def delta_quadratic_form(n: int, edges, labels) -> int:
    """Delta = x^T A x / 2 with x in {-1,+1} (0 label -> -1)."""
    a = adjacency(n, edges)
    x = np.where(np.asarray(labels) == 0, -1, 1)
    return int(x @ a @ x) // 2


def k_clique_percolation(n: int, edges, k: int) -> list[set[int]]:
    """Direct percolation over all k-cliques (no maximal-clique shortcut)."""
    edge_set = {tuple(sorted(e)) for e in edges}

    def is_clique(nodes) -> bool:
        return all(tuple(sorted(p)) in edge_set for p in combinations(nodes, 2))

    cliques = [frozenset(c) for c in combinations(range(n), k) if is_clique(c)]
    parent = list(range(len(cliques)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in combinations(range(len(cliques)), 2):
        if len(cliques[i] & cliques[j]) == k - 1:
            parent[find(i)] = find(j)
    groups: dict[int, set[int]] = {}
    for i, c in enumerate(cliques):
        groups.setdefault(find(i), set()).update(c)
    return list(groups.values())


def kclique_chain_connected(nodes: set[int], edges, k: int) -> bool:
    """Every pair of k-cliques inside `nodes` joined by a (k-1)-overlap chain."""
    edge_set = {tuple(sorted(e)) for e in edges}

    def is_clique(c) -> bool:
        return all(tuple(sorted(p)) in edge_set for p in combinations(c, 2))

    cliques = [frozenset(c) for c in combinations(sorted(nodes), k) if is_clique(c)]
    if not cliques:
        return False
    parent = list(range(len(cliques)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in combinations(range(len(cliques)), 2):
        if len(cliques[i] & cliques[j]) == k - 1:
            parent[find(i)] = find(j)
    return len({find(i) for i in range(len(cliques))}) == 1


def max_spanning_tree_weight(n: int, weighted_edges, forced=None) -> float | None:
    """Kruskal max-ST total weight, optionally forcing one edge in first."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    total, used = 0.0, 0
    if forced is not None:
        u, v, w = forced
        parent[find(u)] = find(v)
        total += w
        used += 1
    for u, v, w in sorted(weighted_edges, key=lambda e: -e[2]):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            total += w
            used += 1
    return total if used == n - 1 else None


def union_max_spanning_trees(n: int, weighted_edges) -> set[tuple[int, int]]:
    """Edges belonging to at least one maximum spanning tree."""
    best = max_spanning_tree_weight(n, weighted_edges)
    assert best is not None, "graph must be connected"
    keep = set()
    for u, v, w in weighted_edges:
        others = [e for e in weighted_edges if (e[0], e[1]) != (u, v)]
        with_e = max_spanning_tree_weight(n, others, forced=(u, v, w))
        if with_e is not None and abs(with_e - best) < 1e-12:
            keep.add((u, v) if u < v else (v, u))
    return keep


def laplacian_second_eigenvector(n: int, edges) -> tuple[float, np.ndarray]:
    """Dense eigendecomposition of the normalized Laplacian; second pair."""
    a = adjacency(n, edges).astype(float)
    d = a.sum(axis=1)
    inv_sqrt = 1.0 / np.sqrt(d)
    lap = np.eye(n) - inv_sqrt[:, None] * a * inv_sqrt[None, :]
    vals, vecs = np.linalg.eigh(lap)
    return float(vals[1]), vecs[:, 1]


def iter_set_partitions(n: int):
    """All partitions of range(n) via restricted growth strings."""
    rgs = [0] * n

    def rec(i: int, maxval: int):
        if i == n:
            blocks: dict[int, list[int]] = {}
            for v, b in enumerate(rgs):
                blocks.setdefault(b, []).append(v)
            yield [set(b) for b in blocks.values()]
            return
        for b in range(maxval + 2):
            rgs[i] = b
            yield from rec(i + 1, max(maxval, b))

    yield from rec(1, 0) if n else iter(())


def best_partition_by_modularity(n: int, edges) -> tuple[float, list[list[set[int]]]]:
    """Exhaustive modularity maximum; returns (Q*, all argmax partitions)."""
    best_q, best = -2.0, []
    for part in iter_set_partitions(n):
        assignment = [0] * n
        for idx, block in enumerate(part):
            for v in block:
                assignment[v] = idx
        q = modularity_double_sum(n, edges, assignment)
        if q > best_q + 1e-12:
            best_q, best = q, [part]
        elif abs(q - best_q) <= 1e-12:
            best.append(part)
    return best_q, best


def glrt_accuracy(p0: np.ndarray, p1: np.ndarray, rng: np.random.Generator,
                  train_per_class: int = 200, eval_per_class: int = 1000) -> float:
    """Independent likelihood-ratio classifier accuracy on fresh draws."""
    n_attr = len(p0)
    train0 = rng.random((train_per_class, n_attr)) < p0
    train1 = rng.random((train_per_class, n_attr)) < p1
    est0 = (train0.sum(axis=0) + 1.0) / (train_per_class + 2.0)
    est1 = (train1.sum(axis=0) + 1.0) / (train_per_class + 2.0)
    w = np.log(est1 / est0)
    w0 = np.log((1 - est1) / (1 - est0))
    correct = 0
    for truth, p in ((0, p0), (1, p1)):
        cases = rng.random((eval_per_class, n_attr)) < p
        llr = cases @ w + (~cases) @ w0
        pred = (llr > 0).astype(int)
        correct += int((pred == truth).sum())
    return correct / (2 * eval_per_class)


def random_graph(rng: np.random.Generator, n: int, p: float) -> list[tuple[int, int]]:
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    return edges
