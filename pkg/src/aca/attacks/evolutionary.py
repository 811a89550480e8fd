"""Evolutionary perturbation attack: a genetic search over edge sets.

Genes are ordered sets of target-incident edges (at most the budget).
Fitness is the target's rank after applying the whole gene, evaluated
through the analyst's detector. Selection is roulette by fitness with one
elite survivor, crossover keeps common edges and samples the rest, and
mutation adds a fresh candidate with probability proportional to its
pre-attack BFS distance from the target.
"""

from __future__ import annotations

from collections import deque

import numpy as np

from ..graph import EdgeOverlay, GraphLike
from ..metrics import rank
from ..rng import substream
from ..validation import check_node, check_temperatures
from .plan import AttackPlan

Gene = tuple[int, ...]  # endpoint ids; every edge is (target, u)


def _bfs_distances(g: GraphLike, source: int) -> np.ndarray:
    dist = np.full(g.n, -1, dtype=np.int64)
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    unreachable = dist < 0
    dist[unreachable] = (dist.max() if dist.max() > 0 else 1) + 1
    return dist


def epa_attack(g: GraphLike, target: int, detector, temps, b: int,
               pop: int = 100, gens: int = 10, seed: int = 0,
               seeds_from: list[AttackPlan] | None = None,
               crossover_rate: float = 0.8, mutation_rate: float = 0.2) -> AttackPlan:
    check_node(g, target)
    t = check_temperatures(g, temps)
    if pop < 2:
        raise ValueError("population must be at least 2")
    if b < 1:
        raise ValueError("budget must be at least 1")
    candidates = [u for u in range(g.n) if u != target and not g.has_edge(target, u)]
    if not candidates:
        return AttackPlan(strategy="epa", target=target, edges=[], budget=b, seed=seed)
    rng = substream(seed, "epa")
    dist = _bfs_distances(g, target).astype(float)
    mutation_weights = dist[candidates]
    mutation_weights /= mutation_weights.sum()

    fitness_cache: dict[frozenset[int], int] = {}

    def fitness(gene: Gene) -> int:
        key = frozenset(gene)
        if key not in fitness_cache:
            view = g if not gene else EdgeOverlay(g, [(target, u) for u in gene])
            cover = detector.detect(view)
            fitness_cache[key] = rank(target, cover, t)
        return fitness_cache[key]

    def random_gene() -> Gene:
        size = int(rng.integers(1, min(b, len(candidates)) + 1))
        picks = rng.choice(len(candidates), size=size, replace=False)
        return tuple(candidates[i] for i in sorted(picks.tolist()))

    population: list[Gene] = []
    if seeds_from:
        prefixes: list[Gene] = []
        for plan in seeds_from:
            ends = [v if u == target else u for u, v in plan.edges
                    if target in (u, v)][:b]
            prefixes.extend(tuple(ends[:k]) for k in range(1, len(ends) + 1))
        for gene in prefixes[: pop // 2]:
            population.append(gene)
    while len(population) < pop:
        population.append(random_gene())

    def crossover(p1: Gene, p2: Gene) -> Gene:
        s1, s2 = set(p1), set(p2)
        child = [u for u in p1 if u in s2]  # common edges, stable order
        for u in list(p1) + list(p2):
            if u not in child and (u in s1) != (u in s2) and rng.random() < 0.5:
                child.append(u)
        return tuple(child[:b])

    def mutate(gene: Gene) -> Gene:
        present = set(gene)
        fresh = [i for i, u in enumerate(candidates) if u not in present]
        if not fresh or len(gene) >= b:
            return gene
        w = mutation_weights[fresh]
        pick = candidates[fresh[int(rng.choice(len(fresh), p=w / w.sum()))]]
        return gene + (pick,)

    best_trace: list[int] = []
    for _ in range(max(gens, 0)):
        scores = np.array([fitness(gene) for gene in population], dtype=float)
        elite = population[int(np.argmax(scores))]
        best_trace.append(int(scores.max()))
        probs = scores / scores.sum() if scores.sum() > 0 else np.full(len(scores), 1 / len(scores))
        next_pop: list[Gene] = [elite]
        while len(next_pop) < pop:
            i, j = rng.choice(len(population), size=2, p=probs)
            child = crossover(population[int(i)], population[int(j)]) \
                if rng.random() < crossover_rate else population[int(i)]
            if rng.random() < mutation_rate:
                child = mutate(child)
            if not child:
                child = random_gene()
            next_pop.append(child)
        population = next_pop
    scores = [fitness(gene) for gene in population]
    best = population[int(np.argmax(scores))]
    best_trace.append(max(scores))
    plan = AttackPlan(strategy="epa", target=target,
                      edges=[(target, u) for u in best], budget=b, seed=seed,
                      params={"pop": pop, "gens": gens})
    plan.params["best_fitness_trace"] = best_trace
    return plan
