"""Community covers: sets of node-sets whose union is the vertex set.

A cover may overlap (overlapping detectors) or be a partition
(Louvain/Leiden). Detectors that leave nodes unassigned append them as
singleton communities so every cover satisfies union coverage.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence


class CommunityCover:
    """An ordered list of distinct non-empty communities covering 0..n-1."""

    __slots__ = ("communities", "n", "method", "params")

    def __init__(self, communities: Iterable[Iterable[int]], n: int,
                 method: str = "", params: dict | None = None):
        seen: set[frozenset[int]] = set()
        comms: list[frozenset[int]] = []
        for c in communities:
            fs = frozenset(int(v) for v in c)
            if not fs:
                raise ValueError("empty community")
            if fs in seen:
                continue
            seen.add(fs)
            comms.append(fs)
        self.communities = comms
        self.n = int(n)
        self.method = method
        self.params = dict(params or {})
        covered: set[int] = set().union(*comms) if comms else set()
        if covered != set(range(self.n)):
            missing = sorted(set(range(self.n)) - covered)[:5]
            extra = sorted(covered - set(range(self.n)))[:5]
            raise ValueError(f"cover does not match node set: missing={missing} extra={extra}")

    @property
    def k(self) -> int:
        return len(self.communities)

    def membership(self) -> list[list[int]]:
        """Per-node list of community indices."""
        member: list[list[int]] = [[] for _ in range(self.n)]
        for idx, c in enumerate(self.communities):
            for v in c:
                member[v].append(idx)
        return member

    def is_partition(self) -> bool:
        return sum(len(c) for c in self.communities) == self.n

    def to_assignment(self) -> list[int]:
        """Community index per node; raises if the cover overlaps."""
        if not self.is_partition():
            raise ValueError("cover is not a partition")
        assign = [0] * self.n
        for idx, c in enumerate(self.communities):
            for v in c:
                assign[v] = idx
        return assign

    def to_json(self) -> str:
        return json.dumps({
            "n": self.n,
            "method": self.method,
            "params": self.params,
            "communities": [sorted(c) for c in self.communities],
        })

    @classmethod
    def from_json(cls, text: str) -> "CommunityCover":
        obj = json.loads(text)
        return cls(obj["communities"], obj["n"], method=obj.get("method", ""),
                   params=obj.get("params"))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CommunityCover):
            return NotImplemented
        return self.n == other.n and set(self.communities) == set(other.communities)

    def __repr__(self) -> str:
        sizes = sorted((len(c) for c in self.communities), reverse=True)
        return f"CommunityCover(k={self.k}, sizes={sizes[:8]}{'...' if self.k > 8 else ''})"


def ensure_cover(communities: Sequence[Iterable[int]], n: int,
                 method: str = "", params: dict | None = None) -> CommunityCover:
    """Build a cover, appending uncovered nodes as singleton communities."""
    comms = [frozenset(c) for c in communities if c]
    covered: set[int] = set().union(*comms) if comms else set()
    for v in range(n):
        if v not in covered:
            comms.append(frozenset((v,)))
    return CommunityCover(comms, n, method=method, params=params)
