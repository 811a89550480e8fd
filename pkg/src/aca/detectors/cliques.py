"""k-clique percolation communities.

Maximal cliques come from Bron-Kerbosch with pivoting; two maximal cliques
of size >= k percolate when they share at least k-1 nodes, which chains
exactly the same k-cliques as the direct definition. Nodes in no k-clique
end up as singleton communities.
"""

from __future__ import annotations

from ..graph import GraphLike
from .base import CommunityDetector


def maximal_cliques(g: GraphLike) -> list[tuple[int, ...]]:
    """All maximal cliques, each as a sorted tuple, in deterministic order."""
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    out: list[tuple[int, ...]] = []

    def expand(r: list[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: (len(adj[u] & p), -u))
        for v in sorted(p - adj[pivot]):
            expand(r + [v], p & adj[v], x & adj[v])
            p.remove(v)
            x.add(v)

    expand([], set(range(g.n)), set())
    return sorted(out)


class CliquePercolationDetector(CommunityDetector):
    """Unions of adjacent k-cliques (default k=3)."""

    def __init__(self, k: int = 3, seed: int = 0):
        self.k = k
        self.seed = seed

    @property
    def name(self) -> str:
        return "cp"

    def detect(self, graph: GraphLike):
        if self.k < 3:
            raise ValueError("clique percolation needs k >= 3")
        cliques = [set(c) for c in maximal_cliques(graph) if len(c) >= self.k]
        parent = list(range(len(cliques)))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        by_node: dict[int, list[int]] = {}
        for idx, c in enumerate(cliques):
            for v in c:
                by_node.setdefault(v, []).append(idx)
        for indices in by_node.values():
            for a_pos in range(len(indices)):
                i = indices[a_pos]
                for b_pos in range(a_pos + 1, len(indices)):
                    j = indices[b_pos]
                    ri, rj = find(i), find(j)
                    if ri != rj and len(cliques[i] & cliques[j]) >= self.k - 1:
                        parent[ri] = rj
        groups: dict[int, set[int]] = {}
        for idx, c in enumerate(cliques):
            groups.setdefault(find(idx), set()).update(c)
        communities = sorted(groups.values(), key=lambda c: (min(c), len(c)))
        return self._cover(communities, graph)
