"""Overlapping communities from a Bernoulli-Poisson membership model.

Each node gets a nonnegative membership vector x_v; an edge (u,v) exists
with probability 1 - exp(-x_u . x_v). The memberships are fitted directly
by projected gradient ascent on the log-likelihood with the edge and
non-edge sides weighted to equal mass, and a node joins community c when
x_v[c] clears the strength at which the model would assign an edge
probability of 1/N.
"""

from __future__ import annotations

import math

import numpy as np

from ..graph import GraphLike
from ..rng import substream, substream_seed
from .base import CommunityDetector

_EPS = 1e-10


class BPOverlapDetector(CommunityDetector):
    """Membership factorization under the Bernoulli-Poisson edge model."""

    def __init__(self, dim: int | None = None, max_iter: int = 500,
                 rel_tol: float = 1e-5, seed: int = 0):
        self.dim = dim
        self.max_iter = max_iter
        self.rel_tol = rel_tol
        self.seed = seed

    @property
    def name(self) -> str:
        return "bp"

    def _resolve_dim(self, graph: GraphLike) -> int:
        if self.dim is not None:
            if self.dim < 1:
                raise ValueError("membership dimension must be >= 1")
            return int(self.dim)
        from .louvain import LouvainDetector

        cover = LouvainDetector(seed=substream_seed(self.seed, "bp-dim")).detect(graph)
        return max(1, cover.k)

    def fit_memberships(self, graph: GraphLike) -> np.ndarray:
        import scipy.sparse as sp

        n = graph.n
        edges = graph.edges()
        m = len(edges)
        if m == 0:
            raise ValueError("bp-overlap needs at least one edge")
        dim = self._resolve_dim(graph)
        u_idx = np.fromiter((e[0] for e in edges), dtype=np.int64, count=m)
        v_idx = np.fromiter((e[1] for e in edges), dtype=np.int64, count=m)
        non_edges = n * (n - 1) // 2 - m
        alpha = m / non_edges if non_edges > 0 else 0.0

        # fixed-sparsity symmetric matrix whose data is refreshed per step;
        # seeding with 1..2m recovers the data ordering csr applies
        rows = np.concatenate([u_idx, v_idx])
        cols = np.concatenate([v_idx, u_idx])
        weights = sp.csr_matrix(
            (np.arange(1, 2 * m + 1, dtype=np.float64), (rows, cols)), shape=(n, n))
        data_perm = weights.data.astype(np.int64) - 1

        rng = substream(self.seed, "bp-init")
        f = rng.random((n, dim)) * math.sqrt(2.0 * m / (n * dim))

        def edge_strengths(fm: np.ndarray) -> np.ndarray:
            return np.maximum(np.einsum("ij,ij->i", fm[u_idx], fm[v_idx]), _EPS)

        def loglik(fm: np.ndarray, s: np.ndarray | None = None) -> float:
            if s is None:
                s = edge_strengths(fm)
            edge_term = np.log(-np.expm1(-s)).sum()
            total = fm.sum(axis=0)
            all_pairs = (total @ total - np.einsum("ij,ij->", fm, fm)) / 2.0
            return float(edge_term - alpha * (all_pairs - s.sum()))

        def gradient(fm: np.ndarray, s: np.ndarray) -> np.ndarray:
            coef = 1.0 / np.expm1(s) + alpha
            cc = np.concatenate([coef, coef])
            weights.data = cc[data_perm]
            grad = weights @ fm
            total = fm.sum(axis=0)
            grad -= alpha * (total[None, :] - fm)
            return grad

        s = edge_strengths(f)
        ll = loglik(f, s)
        if not np.isfinite(ll):
            raise RuntimeError("non-finite likelihood at initialization")
        trace = [ll]
        step = 0.1
        for _ in range(self.max_iter):
            grad = gradient(f, s)
            accepted = False
            for _ in range(40):
                candidate = np.maximum(f + step * grad, 0.0)
                s_new = edge_strengths(candidate)
                ll_new = loglik(candidate, s_new)
                if not np.isfinite(ll_new):
                    raise RuntimeError("non-finite likelihood; bad step configuration")
                if ll_new >= ll:
                    accepted = True
                    break
                step *= 0.5
            if not accepted:
                break
            improvement = ll_new - ll
            f, ll, s = candidate, ll_new, s_new
            trace.append(ll)
            step = min(step * 1.25, 10.0)
            if improvement < self.rel_tol * (abs(ll) + 1.0):
                break
        self.objective_trace_ = trace
        return f

    def detect(self, graph: GraphLike):
        f = self.fit_memberships(graph)
        n = graph.n
        # strength at which the model assigns edge probability 1/N
        rho = math.sqrt(-math.log(1.0 - 1.0 / n)) if n > 1 else 0.0
        communities = []
        for c in range(f.shape[1]):
            members = np.flatnonzero(f[:, c] >= rho)
            if members.size:
                communities.append(members.tolist())
        communities.sort(key=lambda c: (min(c), len(c)))
        return self._cover(communities, graph)
