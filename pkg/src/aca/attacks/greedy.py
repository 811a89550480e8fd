"""Detector-querying greedy attacks: modularity moves and importance hiding."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..graph import EdgeOverlay, GraphLike
from ..cover import CommunityCover
from ..metrics import _temp_fraction
from ..validation import check_node, check_temperatures
from .plan import AttackPlan


def _disjointify(cover: CommunityCover, temps: np.ndarray | None) -> list[set[int]]:
    """Collapse an overlapping cover into a partition for modularity scoring.

    Each node keeps its hottest community when temperatures are known,
    otherwise its largest; ties go to the earlier community in cover order.
    """
    if cover.is_partition():
        return [set(c) for c in cover.communities]
    keep: dict[int, int] = {}
    best_key: dict[int, tuple] = {}
    for idx, c in enumerate(cover.communities):
        if temps is not None:
            key = (_temp_fraction(c, temps), -idx)
        else:
            key = (len(c), -idx)
        for v in c:
            if v not in keep or key > best_key[v]:
                keep[v] = idx
                best_key[v] = key
    blocks: dict[int, set[int]] = {}
    for v, idx in keep.items():
        blocks.setdefault(idx, set()).add(v)
    return [blocks[idx] for idx in sorted(blocks)]


def _q_of_assignment(edge_u: np.ndarray, edge_v: np.ndarray, degrees: np.ndarray,
                     assign: np.ndarray, m: int) -> float:
    """Partition modularity from a per-node community-index array."""
    k = int(assign.max()) + 1
    same = assign[edge_u] == assign[edge_v]
    m_c = np.bincount(assign[edge_u][same], minlength=k)
    d_c = np.bincount(assign, weights=degrees, minlength=k)
    return float((m_c / m - (d_c / (2 * m)) ** 2).sum())


def modularity_attack(g: GraphLike, target: int, detector, b: int,
                      temps=None) -> AttackPlan:
    """Greedily wire the target toward the community maximizing modularity.

    Each step re-runs the detector on the current overlay, scores every
    community not holding the target by the partition modularity if the
    target moved there, and connects to the chosen community's
    highest-degree non-neighbor member.
    """
    check_node(g, target)
    t = check_temperatures(g, temps) if temps is not None else None
    edges: list[tuple[int, int]] = []
    for _ in range(b):
        view = g if not edges else EdgeOverlay(g, edges)
        blocks = _disjointify(detector.detect(view), t)
        target_block = next(i for i, c in enumerate(blocks) if target in c)
        edge_u = np.fromiter((e[0] for e in view.edges()), dtype=np.int64)
        edge_v = np.fromiter((e[1] for e in view.edges()), dtype=np.int64)
        degrees = view.degrees().astype(np.float64)
        assign = np.empty(g.n, dtype=np.int64)
        for idx, blk in enumerate(blocks):
            assign[list(blk)] = idx
        m = view.num_edges
        best_q, best_member = None, None
        for idx, c in enumerate(blocks):
            if idx == target_block:
                continue
            members = [u for u in sorted(c)
                       if u != target and not view.has_edge(target, u)]
            if not members:
                continue
            moved = assign.copy()
            moved[target] = idx
            q = _q_of_assignment(edge_u, edge_v, degrees, moved, m)
            if best_q is None or q > best_q + 1e-12:
                best_q = q
                best_member = max(members, key=lambda u: (view.degree(u), -u))
        if best_member is None:
            break
        edges.append((target, best_member))
    return AttackPlan(strategy="mod", target=target, edges=edges, budget=b)


def community_importance(g: GraphLike, u: int, community: frozenset[int] | set[int]) -> float:
    """Degree importance of member u within its community.

    Sums the overlap between u's in-community neighborhood and that of each
    in-community neighbor, scaled by (deg-1)/deg on the full-graph degree
    (degree 0 treated as 1).
    """
    members = set(community)
    nbrs_in = set(g.neighbors(u)) & members - {u}
    overlap = sum(len(nbrs_in & (set(g.neighbors(w)) & members - {w}))
                  for w in nbrs_in)
    deg = max(g.degree(u), 1)
    return overlap * (deg - 1) / deg


def bih_attack(g: GraphLike, target: int, detector, b: int) -> AttackPlan:
    """Join the community offering the most new connections, by importance.

    Communities come from one detector run on the clean graph; within the
    chosen community members are connected in decreasing degree importance
    (ties by id). When a community is exhausted the counts are recomputed
    and the next richest community is chosen, until the budget runs out.
    """
    check_node(g, target)
    if b < 1:
        raise ValueError("budget must be at least 1")
    cover = detector.detect(g)
    connected: set[int] = set()
    edges: list[tuple[int, int]] = []
    while len(edges) < b:
        best_idx, best_count = None, 0
        for idx, c in enumerate(cover.communities):
            count = sum(1 for u in c
                        if u != target and u not in connected
                        and not g.has_edge(target, u))
            if count > best_count:
                best_idx, best_count = idx, count
        if best_idx is None:
            break
        community = cover.communities[best_idx]
        members = [u for u in sorted(community)
                   if u != target and u not in connected
                   and not g.has_edge(target, u)]
        members.sort(key=lambda u: (-community_importance(g, u, community), u))
        for u in members:
            if len(edges) >= b:
                break
            edges.append((target, u))
            connected.add(u)
    return AttackPlan(strategy="bih", target=target, edges=edges, budget=b)
