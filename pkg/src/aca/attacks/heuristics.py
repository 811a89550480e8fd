"""Temperature-guided attacks: cold-first ordering and stable structures."""

from __future__ import annotations

import numpy as np

from ..detectors.base import stable_structures
from ..graph import GraphLike
from ..metrics import _temp_fraction
from ..rng import substream, substream_seed
from ..validation import check_node, check_temperatures
from .plan import AttackPlan


def _addable(g: GraphLike, target: int) -> list[int]:
    return [u for u in range(g.n)
            if u != target and not g.has_edge(target, u)]


def cold_and_lonely(g: GraphLike, target: int, temps, b: int) -> AttackPlan:
    """Connect to cold nodes first, then unknown, then hot; low degree first."""
    check_node(g, target)
    t = check_temperatures(g, temps)
    if b < 1:
        raise ValueError("budget must be at least 1")
    order = sorted(_addable(g, target), key=lambda u: (t[u], g.degree(u), u))
    return AttackPlan(strategy="cl", target=target,
                      edges=[(target, u) for u in order[:b]], budget=b)


def _stable_structure_order(g: GraphLike, target: int, temps: np.ndarray,
                            detector, trials: int, seed: int) -> list[int]:
    """Candidate order: coldest stable structures first, leftovers by temperature."""
    structures = stable_structures(g, detector, trials,
                                   substream_seed(seed, "ss-trials")).structures
    rng = substream(seed, "ss-order")
    eligible = set(_addable(g, target))
    ordered_structures = sorted(
        structures, key=lambda s: (_temp_fraction(s, temps), min(s)))
    order: list[int] = []
    in_structure: set[int] = set()
    for s in ordered_structures:
        in_structure |= s
        members = sorted(u for u in s if u in eligible)
        order.extend(rng.permutation(members).tolist() if members else [])
    leftovers = sorted(u for u in eligible - in_structure)
    if leftovers:
        shuffled = rng.permutation(leftovers).tolist()
        shuffled.sort(key=lambda u: int(temps[u]))  # stable: ties stay random
        order.extend(shuffled)
    return order


def stable_structure_attack(g: GraphLike, target: int, temps, detector,
                            trials: int, b: int, seed: int) -> AttackPlan:
    """Connect into stable structures from coldest to hottest."""
    check_node(g, target)
    t = check_temperatures(g, temps)
    if b < 1:
        raise ValueError("budget must be at least 1")
    order = _stable_structure_order(g, target, t, detector, trials, seed)
    return AttackPlan(strategy="ss", target=target,
                      edges=[(target, u) for u in order[:b]], budget=b,
                      seed=seed, params={"trials": trials})


def ss_nbr_attack(g: GraphLike, target: int, temps, detector, trials: int,
                  b: int, seed: int) -> AttackPlan:
    """Stable-structure order, tying each new neighbor to the old ones.

    After every target->w edge the plan links w to each of the target's
    pre-attack neighbors (in id order) it is not already adjacent to; all
    edges count against the budget.
    """
    check_node(g, target)
    t = check_temperatures(g, temps)
    if b < 1:
        raise ValueError("budget must be at least 1")
    order = _stable_structure_order(g, target, t, detector, trials, seed)
    original_neighbors = sorted(g.neighbors(target))
    edges: list[tuple[int, int]] = []
    for w in order:
        if len(edges) >= b:
            break
        edges.append((target, w))
        for nb in original_neighbors:
            if len(edges) >= b:
                break
            if nb != w and not g.has_edge(w, nb):
                edges.append((w, nb))
    return AttackPlan(strategy="ss-nbr", target=target, edges=edges, budget=b,
                      seed=seed, params={"trials": trials}, neighbor_link=True)
