"""Detector base class and repeated-run stable structures.

Detectors follow the estimator convention: constructor parameters are
stored verbatim, :meth:`fit` computes a community cover for a graph and
stashes it on ``cover_``, and :meth:`detect` returns a cover without
touching estimator state. Every detector takes a ``seed`` and is
bit-reproducible for a fixed (graph, params, seed).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from sklearn.base import BaseEstimator, clone

from ..cover import CommunityCover
from ..graph import GraphLike
from ..rng import substream_seed


class CommunityDetector(BaseEstimator):
    """Base class for community detection estimators."""

    seed: int

    def fit(self, graph: GraphLike, y=None):
        self.cover_ = self.detect(graph)
        self.communities_ = [sorted(c) for c in self.cover_.communities]
        return self

    def fit_predict(self, graph: GraphLike, y=None) -> CommunityCover:
        return self.fit(graph).cover_

    def detect(self, graph: GraphLike) -> CommunityCover:
        raise NotImplementedError

    def with_seed(self, seed: int) -> "CommunityDetector":
        """A fresh estimator with the same params but a different seed."""
        det = clone(self)
        det.set_params(seed=int(seed))
        return det

    @property
    def name(self) -> str:
        return type(self).__name__.removesuffix("Detector").lower()

    def _cover(self, communities, graph: GraphLike) -> CommunityCover:
        from ..cover import ensure_cover

        return ensure_cover(communities, graph.n, method=self.name,
                            params=self.get_params())


@dataclass
class StableStructureSet:
    """Disjoint node sets grouped together in every one of several runs."""

    structures: list[frozenset[int]]
    trials: int
    detector: str
    params: dict

    def covered_nodes(self) -> set[int]:
        out: set[int] = set()
        for s in self.structures:
            out |= s
        return out


def stable_structures(graph: GraphLike, detector: CommunityDetector,
                      trials: int, seed: int) -> StableStructureSet:
    """Run a detector ``trials`` times and keep always-co-grouped node sets.

    Two nodes co-belong in a run when some community contains both. The
    co-membership pairs surviving every run form a graph whose connected
    components of size >= 2 are the stable structures; they are disjoint by
    construction even for overlapping detectors. Per-trial seeds derive from
    the master seed by counter, so the result is schedule-independent.
    """
    if trials < 2:
        raise ValueError("stable structures need at least 2 trials")
    surviving: set[tuple[int, int]] | None = None
    for t in range(trials):
        det = detector.with_seed(substream_seed(seed, "trial", t))
        cover = det.detect(graph)
        pairs: set[tuple[int, int]] = set()
        for c in cover.communities:
            members = sorted(c)
            if surviving is None:
                pairs.update(combinations(members, 2))
            else:
                for pair in combinations(members, 2):
                    if pair in surviving:
                        pairs.add(pair)
        surviving = pairs
        if not surviving:
            break
    assert surviving is not None
    parent = list(range(graph.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in surviving:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, list[int]] = {}
    for v in range(graph.n):
        groups.setdefault(find(v), []).append(v)
    structures = sorted((frozenset(m) for m in groups.values() if len(m) >= 2),
                        key=lambda s: min(s))
    return StableStructureSet(structures=structures, trials=trials,
                              detector=detector.name, params=detector.get_params())
