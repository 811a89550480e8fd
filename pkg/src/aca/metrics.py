"""Triage metrics: temperature, rank, modularity, homophily measures.

Temperatures are per-node values in {-1 cold, 0 unknown, +1 hot}. A
community's temperature is the mean over its members; a node's community
temperature is the hottest such mean among the communities it belongs to,
and its rank is the number of nodes the analyst wades through before
reaching it: the size of the union of all communities at least that hot.

Rank is a counting metric, so community temperatures are compared as exact
integer fractions (sum, size); floats only appear in reported values.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable

import numpy as np

from .cover import CommunityCover
from .graph import GraphLike
from .validation import check_cover, check_labels, check_node, check_temperatures


def _temp_fraction(community: Iterable[int], temps: np.ndarray) -> Fraction:
    members = list(community)
    if not members:
        raise ValueError("empty community has no temperature")
    return Fraction(int(temps[members].sum()), len(members))


def community_temperature(community: Iterable[int], temps) -> float:
    """Mean temperature of a node set."""
    temps = np.asarray(temps, dtype=np.int64)
    return float(_temp_fraction(community, temps))


def node_community_temperature(v: int, cover: CommunityCover, temps) -> float:
    """Temperature of the hottest community containing v."""
    temps = np.asarray(temps, dtype=np.int64)
    return float(_node_temp_fraction(v, cover, temps))


def _node_temp_fraction(v: int, cover: CommunityCover, temps: np.ndarray) -> Fraction:
    fractions = [_temp_fraction(c, temps) for c in cover.communities if v in c]
    if not fractions:
        raise ValueError(f"node {v} not covered by any community")
    return max(fractions)


def rank(v: int, cover: CommunityCover, temps) -> int:
    """Number of nodes in the union of communities as hot as v's hottest."""
    temps = np.asarray(temps, dtype=np.int64)
    threshold = _node_temp_fraction(v, cover, temps)
    union: set[int] = set()
    for c in cover.communities:
        if _temp_fraction(c, temps) >= threshold:
            union.update(c)
    return len(union)


def modularity(g: GraphLike, partition: CommunityCover) -> float:
    """Newman modularity Q of a disjoint partition.

    Q = (1/2M) sum_{u,v} [A_uv - k_u k_v / 2M] 1[C(u)=C(v)], evaluated per
    community as m_c/M - (d_c/2M)^2. Overlapping covers are rejected.
    """
    check_cover(g, partition)
    if not partition.is_partition():
        raise ValueError("modularity requires a disjoint partition")
    m = g.num_edges
    if m == 0:
        raise ValueError("modularity undefined on an edgeless graph")
    degrees = g.degrees()
    q = 0.0
    for c in partition.communities:
        members = sorted(c)
        member_set = c
        intra = sum(1 for v in members for w in g.neighbors(v) if w > v and w in member_set)
        d_c = int(degrees[members].sum())
        q += intra / m - (d_c / (2 * m)) ** 2
    return q


def heterophilicity(g: GraphLike, labels) -> float:
    """Observed cross-label edges over their random-rewiring expectation.

    H = |E_01| / (|V_0| |V_1| M / C(N,2)). Low H means high homophily.
    """
    lab = check_labels(g, labels, binary=True)
    n0 = int((lab == 0).sum())
    n1 = int((lab == 1).sum())
    m = g.num_edges
    if n0 == 0 or n1 == 0:
        raise ValueError("heterophilicity needs both label classes non-empty")
    if m == 0:
        raise ValueError("heterophilicity undefined on an edgeless graph")
    cross = sum(1 for u, v in g.edges() if lab[u] != lab[v])
    expected = n0 * n1 * m / comb(g.n, 2)
    return cross / expected


def delta_homophily(g: GraphLike, labels) -> int:
    """Within-label edges minus cross-label edges: |E_00| + |E_11| - |E_01|."""
    lab = check_labels(g, labels, binary=True)
    within = sum(1 for u, v in g.edges() if lab[u] == lab[v])
    return within - (g.num_edges - within)


def temperature_map(hot: Iterable[int], cold: Iterable[int], n: int) -> np.ndarray:
    """Build a temperature array from hot/cold node lists (rest unknown)."""
    t = np.zeros(n, dtype=np.int64)
    t[list(hot)] = 1
    t[list(cold)] = -1
    return t


def baseline_rank(g: GraphLike, v: int, cover: CommunityCover, temps) -> tuple[int, float]:
    """Rank and community temperature of v under a given cover."""
    check_node(g, v)
    t = check_temperatures(g, temps)
    return rank(v, cover, t), node_community_temperature(v, cover, t)
