"""Random graph models: ER, WS, BA, LFR, MAG.

Every model targets ~n nodes at a given average degree, is deterministic
for a fixed seed, and is followed by a largest-connected-component pass in
:func:`generate`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import networkx as nx
import numpy as np

from ..graph import Graph, largest_connected_component
from ..rng import substream

MODELS = ("er", "ws", "ba", "lfr", "mag")

_DEFAULTS = {
    "ws": {"beta": 0.1},
    "lfr": {"tau1": 2.5, "tau2": 1.5, "mu": 0.1, "min_community": 20,
            "max_community": 100, "retries": 5},
    "mag": {"num_attrs": 8, "affinity": ((0.85, 0.55), (0.55, 0.15))},
}


@dataclass
class SynthConfig:
    model: str
    n: int = 4000
    target_avg_degree: float = 10.0
    model_params: dict = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        self.model = self.model.lower()
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}; choose from {MODELS}")
        if self.n < 4:
            raise ValueError("n must be at least 4")
        if not self.target_avg_degree < self.n - 1:
            raise ValueError("target average degree must be below n-1")
        params = dict(_DEFAULTS.get(self.model, {}))
        params.update(self.model_params)
        self.model_params = params


def _er(n: int, avg_degree: float, rng: np.random.Generator) -> Graph:
    """G(n, p) by geometric edge skipping, p = avg/(n-1)."""
    p = avg_degree / (n - 1)
    edges = []
    if p >= 1.0:
        raise ValueError("ER density must be below 1")
    log_q = math.log(1.0 - p)
    v, w = 1, -1
    while v < n:
        w += 1 + int(math.log(1.0 - rng.random()) / log_q)
        while w >= v and v < n:
            w -= v
            v += 1
        if v < n:
            edges.append((v, w))
    return Graph(n, edges)


def _ws(n: int, avg_degree: float, rng: np.random.Generator, beta: float) -> Graph:
    """Ring lattice with k = avg_degree neighbors, each edge rewired w.p. beta."""
    k = int(round(avg_degree))
    if k % 2 or k <= 0:
        raise ValueError("WS ring lattice needs an even positive degree k")
    if not 0 <= beta <= 1:
        raise ValueError("rewiring probability must be in [0, 1]")
    edge_set: set[tuple[int, int]] = set()
    adj_count = np.full(n, 0)
    for j in range(1, k // 2 + 1):
        for i in range(n):
            key = tuple(sorted((i, (i + j) % n)))
            edge_set.add(key)
            adj_count[key[0]] += 1
            adj_count[key[1]] += 1
    for j in range(1, k // 2 + 1):
        for i in range(n):
            if rng.random() >= beta:
                continue
            old = tuple(sorted((i, (i + j) % n)))
            if old not in edge_set:
                continue  # already rewired away by an earlier pass
            if adj_count[i] >= n - 1:
                continue
            while True:
                w = int(rng.integers(0, n))
                if w == i:
                    continue
                new = tuple(sorted((i, w)))
                if new not in edge_set:
                    break
            edge_set.remove(old)
            adj_count[old[0]] -= 1
            adj_count[old[1]] -= 1
            edge_set.add(new)
            adj_count[new[0]] += 1
            adj_count[new[1]] += 1
    return Graph(n, edge_set)


def _ba(n: int, avg_degree: float, rng: np.random.Generator) -> Graph:
    """Preferential attachment with m = avg/2 links from an m-clique seed."""
    m = int(round(avg_degree / 2))
    if m < 1 or n <= m:
        raise ValueError("BA needs 1 <= m < n")
    edges = [(i, j) for i in range(m) for j in range(i + 1, m)]
    # each endpoint appears once per incident edge, giving degree-weighted draws
    repeated: list[int] = [v for e in edges for v in e]
    for v in range(m, n):
        targets: set[int] = set()
        while len(targets) < m:
            targets.add(repeated[int(rng.integers(0, len(repeated)))])
        for t in sorted(targets):
            edges.append((t, v))
            repeated.append(t)
            repeated.append(v)
    return Graph(n, edges)


def _lfr(n: int, avg_degree: float, rng: np.random.Generator, tau1: float,
         tau2: float, mu: float, min_community: int, max_community: int,
         retries: int) -> Graph:
    """LFR benchmark via networkx, retried over derived seeds."""
    last_err: Exception | None = None
    for attempt in range(retries):
        seed = int(rng.integers(0, 2**31 - 1))
        try:
            g = nx.LFR_benchmark_graph(
                n, tau1, tau2, mu, average_degree=avg_degree,
                max_degree=min(n - 1, 10 * int(avg_degree)),
                min_community=min_community, max_community=max_community,
                seed=seed, max_iters=500)
        except nx.ExceededMaxIterations as err:
            last_err = err
            continue
        edges = {(u, v) for u, v in g.edges() if u != v}
        return Graph(n, edges)
    raise RuntimeError(
        f"LFR degree/community sequence unsatisfiable after {retries} retries "
        f"(tau1={tau1}, tau2={tau2}, mu={mu}, avg_degree={avg_degree}, "
        f"min_community={min_community}, max_community={max_community}): {last_err}")


def _mag(n: int, avg_degree: float, rng: np.random.Generator, num_attrs: int,
         affinity) -> Graph:
    """Multiplicative attribute graph on iid binary latent attributes.

    Edge probabilities are products of per-attribute affinities, rescaled so
    the expected edge count matches the degree target.
    """
    theta = np.asarray(affinity, dtype=float)
    attrs = (rng.random((n, num_attrs)) < 0.5).astype(np.int64)
    # collapse nodes into 2^L signature classes; probabilities depend only on those
    sig = np.zeros(n, dtype=np.int64)
    for bit in range(num_attrs):
        sig = sig * 2 + attrs[:, bit]
    sigs, inverse, counts = np.unique(sig, return_inverse=True, return_counts=True)
    s = len(sigs)
    bits = ((sigs[:, None] >> np.arange(num_attrs - 1, -1, -1)) & 1)
    prob = np.ones((s, s))
    for bit in range(num_attrs):
        prob *= theta[bits[:, bit][:, None], bits[:, bit][None, :]]
    pair_count = counts[:, None].astype(float) * counts[None, :]
    np.fill_diagonal(pair_count, counts * (counts - 1) / 2.0)
    expected = (np.triu(pair_count * prob, 1).sum()
                + np.diag(pair_count * prob).sum())
    scale = (n * avg_degree / 2.0) / expected
    prob = np.minimum(prob * scale, 1.0)

    members = [np.flatnonzero(inverse == i) for i in range(s)]
    edges: set[tuple[int, int]] = set()
    for i in range(s):
        for j in range(i, s):
            total = int(pair_count[i, j])
            if total == 0 or prob[i, j] == 0.0:
                continue
            k = int(rng.binomial(total, prob[i, j]))
            guard = 0
            while k > 0 and guard < 50 * total:
                guard += 1
                if i == j:
                    a, b = rng.integers(0, len(members[i]), size=2)
                    if a == b:
                        continue
                    u, v = int(members[i][a]), int(members[i][b])
                else:
                    u = int(members[i][rng.integers(0, len(members[i]))])
                    v = int(members[j][rng.integers(0, len(members[j]))])
                key = (u, v) if u < v else (v, u)
                if key in edges:
                    continue
                edges.add(key)
                k -= 1
    return Graph(n, edges)


def sample_model(config: SynthConfig) -> Graph:
    """Draw one graph from the configured model, before any LCC pass."""
    rng = substream(config.seed, "synth", config.model)
    p = config.model_params
    if config.model == "er":
        return _er(config.n, config.target_avg_degree, rng)
    if config.model == "ws":
        return _ws(config.n, config.target_avg_degree, rng, p["beta"])
    if config.model == "ba":
        return _ba(config.n, config.target_avg_degree, rng)
    if config.model == "lfr":
        return _lfr(config.n, config.target_avg_degree, rng, p["tau1"], p["tau2"],
                    p["mu"], p["min_community"], p["max_community"], p["retries"])
    return _mag(config.n, config.target_avg_degree, rng, p["num_attrs"], p["affinity"])


def generate(config: SynthConfig) -> Graph:
    """Sample the model and keep the largest connected component."""
    return largest_connected_component(sample_model(config))
