"""Union-of-maximum-spanning-trees communities.

Edges are weighted by the Jaccard similarity of their endpoints' inclusive
neighborhoods. The UMST keeps every edge that belongs to at least one
maximum spanning tree (equal-weight groups are tested against the
components formed by strictly heavier edges before being merged). Each
node seeds a community from the triangles on its UMST neighborhood, and
communities with overlap coefficient >= 0.5 are merged to a fixpoint.
"""

from __future__ import annotations

from fractions import Fraction

from ..graph import GraphLike, connected_components, jaccard_neighborhood
from .base import CommunityDetector


def umst_edges(g: GraphLike) -> set[tuple[int, int]]:
    """Edges present in some maximum spanning tree under Jaccard weights."""
    if len(connected_components(g)) != 1:
        raise ValueError("umst requires a connected graph (pass the LCC)")
    inclusive = [frozenset(g.neighbors(v)) | {v} for v in range(g.n)]
    weighted = []
    for u, v in g.edges():
        ni, nj = inclusive[u], inclusive[v]
        weighted.append((Fraction(len(ni & nj), len(ni | nj)), u, v))
    weighted.sort(key=lambda t: (-t[0], t[1], t[2]))

    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    keep: set[tuple[int, int]] = set()
    pos = 0
    while pos < len(weighted):
        level = weighted[pos][0]
        group = []
        while pos < len(weighted) and weighted[pos][0] == level:
            group.append(weighted[pos])
            pos += 1
        for _, u, v in group:
            if find(u) != find(v):
                keep.add((u, v))
        for _, u, v in group:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
    return keep


class UMSTDetector(CommunityDetector):
    """Triangle neighborhoods on the UMST, merged by overlap coefficient."""

    def __init__(self, merge_overlap: float = 0.5, seed: int = 0):
        self.merge_overlap = merge_overlap
        self.seed = seed

    @property
    def name(self) -> str:
        return "umst"

    def detect(self, graph: GraphLike):
        tree_edges = umst_edges(graph)
        adj: dict[int, set[int]] = {v: set() for v in range(graph.n)}
        for u, v in tree_edges:
            adj[u].add(v)
            adj[v].add(u)

        seeds: list[frozenset[int]] = []
        for v in range(graph.n):
            members = {v}
            nbrs = sorted(adj[v])
            for a_pos in range(len(nbrs)):
                for b_pos in range(a_pos + 1, len(nbrs)):
                    a, b = nbrs[a_pos], nbrs[b_pos]
                    if b in adj[a]:
                        members.add(a)
                        members.add(b)
            seeds.append(frozenset(members))

        communities: list[set[int]] = []
        for s in sorted(set(seeds), key=lambda c: (min(c), sorted(c))):
            communities.append(set(s))
        merged = True
        while merged:
            merged = False
            i = 0
            while i < len(communities):
                j = i + 1
                while j < len(communities):
                    a, b = communities[i], communities[j]
                    if len(a & b) >= self.merge_overlap * min(len(a), len(b)):
                        a |= b
                        del communities[j]
                        merged = True
                    else:
                        j += 1
                i += 1
        communities = sorted(communities, key=lambda c: (min(c), len(c)))
        return self._cover(communities, graph)
