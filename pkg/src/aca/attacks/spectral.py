"""Spectral embedding attack: add edges that degrade a low-rank embedding.

The embedding view is the top-dim eigenpairs of the random-walk-normalized
adjacency (generalized problem A u = lambda D u). A candidate edge from the
target scores by the first-order drop it induces in the captured spectrum
energy — equivalently the increase in the rank-dim reconstruction loss —
using the eigenvalue perturbation estimate
    d_lambda_i = 2 u_i[t] u_i[u] - lambda_i (u_i[t]^2 + u_i[u]^2)
for generalized eigenvectors normalized against the degree matrix.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from ..graph import GraphLike
from ..rng import substream
from ..validation import check_node
from .plan import AttackPlan

_DENSE_LIMIT = 1500


def _top_eigenpairs(g: GraphLike, dim: int, seed: int) -> tuple[np.ndarray, np.ndarray]:
    """Top-|lambda| eigenpairs of D^{-1/2} A D^{-1/2}, as generalized vectors."""
    a = g.adjacency_matrix()
    deg = np.maximum(np.asarray(a.sum(axis=1)).ravel(), 1.0)
    inv_sqrt = 1.0 / np.sqrt(deg)
    sym = sp.diags(inv_sqrt) @ a @ sp.diags(inv_sqrt)
    dim = min(dim, g.n - 1)
    if g.n <= _DENSE_LIMIT:
        vals, vecs = scipy.linalg.eigh(sym.toarray())
    else:
        v0 = substream(seed, "emb-start").standard_normal(g.n)
        try:
            vals, vecs = spla.eigsh(sym, k=dim, which="LM", v0=v0, tol=1e-8)
        except spla.ArpackNoConvergence as err:
            raise RuntimeError("embedding eigensolver did not converge") from err
    top = np.argsort(-np.abs(vals))[:dim]
    return vals[top], vecs[:, top] * inv_sqrt[:, None]


def candidate_scores(g: GraphLike, target: int, dim: int, seed: int) -> dict[int, float]:
    """Reconstruction-loss increase estimate for every addable edge."""
    vals, vecs = _top_eigenpairs(g, dim, seed)
    candidates = [u for u in range(g.n) if u != target and not g.has_edge(target, u)]
    vt = vecs[target]
    scores: dict[int, float] = {}
    for u in candidates:
        vu = vecs[u]
        delta = 2.0 * vt * vu - vals * (vt * vt + vu * vu)
        scores[u] = float(-(2.0 * vals * delta).sum())
    return scores


def embedding_attack(g: GraphLike, target: int, b: int, dim: int = 32,
                     seed: int = 0) -> AttackPlan:
    check_node(g, target)
    if b < 1:
        raise ValueError("budget must be at least 1")
    if dim < 2:
        raise ValueError("embedding dimension must be >= 2")
    scores = candidate_scores(g, target, dim, seed)
    order = sorted(scores, key=lambda u: (-scores[u], u))
    return AttackPlan(strategy="emb", target=target,
                      edges=[(target, u) for u in order[:b]], budget=b,
                      seed=seed, params={"dim": dim})
