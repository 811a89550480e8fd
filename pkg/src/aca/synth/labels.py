"""Homophily-controlled binary labels for synthetic graphs.

Labels start from a spectral bisection of the normalized Laplacian; the
swap procedure then trades one homophilous node from each side until the
within-minus-cross edge count Delta reaches a target.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from ..graph import GraphLike, connected_components
from ..metrics import delta_homophily
from ..rng import substream
from ..validation import check_labels


class SwapExhausted(RuntimeError):
    """No reducible pair: some side has no positive selection weight."""


@dataclass
class ReduceReport:
    achieved_delta: int
    steps: int
    stop_reason: str  # "target", "max_steps", or "exhausted"


def laplacian_bisection(g: GraphLike, seed: int = 0, tol: float = 1e-8,
                        maxiter: int = 10000) -> np.ndarray:
    """Bisect a connected graph by the normalized Laplacian's second eigenvector.

    The eigenpair comes from an iterative Lanczos solve on 2I - L with a
    seeded start vector, so the result is deterministic for a given seed.
    The floor(N/2) nodes with the smallest entries (after flipping the sign
    so node 0's entry is <= 0) are labeled 0, the rest 1.
    """
    if g.n < 4:
        raise ValueError("bisection needs at least 4 nodes")
    if len(connected_components(g)) != 1:
        raise ValueError("bisection requires a connected graph")
    a = g.adjacency_matrix()
    d = np.asarray(a.sum(axis=1)).ravel()
    inv_sqrt = 1.0 / np.sqrt(d)
    sym = sp.diags(inv_sqrt) @ a @ sp.diags(inv_sqrt)
    shifted = sp.identity(g.n, format="csr") + sym  # 2I - L, eigenvalues in [0, 2]
    v0 = substream(seed, "bisection-start").standard_normal(g.n)
    try:
        vals, vecs = spla.eigsh(shifted, k=2, which="LA", v0=v0, tol=tol,
                                maxiter=maxiter)
    except spla.ArpackNoConvergence as err:
        raise RuntimeError(f"eigensolver did not converge within {maxiter} iterations") from err
    u2 = vecs[:, int(np.argmin(vals))]  # smaller of the two largest = second pair
    if u2[0] > 0:
        u2 = -u2
    order = np.argsort(u2, kind="stable")
    labels = np.ones(g.n, dtype=np.int64)
    labels[order[: g.n // 2]] = 0
    return labels


def _selection_weights(d: np.ndarray, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    up = np.where((d > 0) & (x > 0), d, 0).astype(float)
    down = np.where((d < 0) & (x < 0), -d, 0).astype(float)
    return up, down


def swap_to_reduce(g: GraphLike, labels, rng: np.random.Generator) -> np.ndarray:
    """One homophily-reducing label swap.

    With x in {-1,+1} per label and d = A x, a class-1 node u is drawn with
    probability proportional to d_u (restricted to d_u > 0) and a class-0
    node v proportional to |d_v| (restricted to d_v < 0); their labels are
    exchanged. Raises :class:`SwapExhausted` when either side has no weight.
    """
    lab = check_labels(g, labels, binary=True)
    x = np.where(lab == 0, -1, 1)
    d = np.zeros(g.n, dtype=np.int64)
    for v in range(g.n):
        d[v] = sum(x[w] for w in g.neighbors(v))
    u, v = _draw_swap_pair(d, x, rng)
    out = lab.copy()
    out[u] = 0
    out[v] = 1
    return out


def _draw_swap_pair(d: np.ndarray, x: np.ndarray, rng: np.random.Generator) -> tuple[int, int]:
    up, down = _selection_weights(d, x)
    if up.sum() == 0 or down.sum() == 0:
        raise SwapExhausted("no reducible pair")
    u = int(rng.choice(len(d), p=up / up.sum()))
    v = int(rng.choice(len(d), p=down / down.sum()))
    return u, v


def reduce_homophily(g: GraphLike, labels, target_delta: int, max_steps: int,
                     rng: np.random.Generator) -> tuple[np.ndarray, ReduceReport]:
    """Swap labels until Delta <= target_delta, a step cap, or exhaustion."""
    lab = check_labels(g, labels, binary=True)
    delta = delta_homophily(g, lab)
    if target_delta > delta:
        raise ValueError(f"target delta {target_delta} above current {delta}")
    x = np.where(lab == 0, -1, 1)
    d = np.zeros(g.n, dtype=np.int64)
    for v in range(g.n):
        d[v] = sum(x[w] for w in g.neighbors(v))
    steps = 0
    reason = "target"
    while delta > target_delta:
        if steps >= max_steps:
            reason = "max_steps"
            break
        try:
            u, v = _draw_swap_pair(d, x, rng)
        except SwapExhausted:
            reason = "exhausted"
            break
        adjacent = g.has_edge(u, v)
        delta = delta - 2 * int(d[u] - d[v]) - (4 if adjacent else 0)
        x[u] = -1
        x[v] = 1
        for w in g.neighbors(u):
            d[w] -= 2
        for w in g.neighbors(v):
            d[w] += 2
        steps += 1
    out = np.where(x < 0, 0, 1).astype(np.int64)
    return out, ReduceReport(achieved_delta=int(delta), steps=steps, stop_reason=reason)
